#include "wqe/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wqe {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kZeroEigenvalue = 1e-12;  // "nonzero spectrum" cut at density scale

void check_shape(const Hermitian& h, const std::optional<SubsystemShape>& shape) {
  if (shape && shape->dim() != h.dim()) {
    std::ostringstream os;
    os << "shape dim " << shape->dim() << " does not match matrix dim " << h.dim();
    throw ShapeError(os.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Hermitian h, std::optional<SubsystemShape> shape)
    : h_(std::move(h)), shape_(std::move(shape)) {
  check_shape(h_, shape_);
  const double tr = h_.mat().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " is not 1";
    throw Error(os.str());
  }
  const SpectralDecomposition eig = hermitian_eig(h_);
  const double lam_min = eig.eigenvalues[eig.dim() - 1];
  if (lam_min < -kPsdTol) {
    std::ostringstream os;
    os << "DensityMatrix: min eigenvalue " << lam_min;
    throw NotPsdError(os.str());
  }
}

DensityMatrix DensityMatrix::from_matrix(Mat m, std::optional<SubsystemShape> shape) {
  return DensityMatrix(Hermitian(std::move(m)), std::move(shape));
}

DensityMatrix DensityMatrix::with_shape(SubsystemShape shape) const {
  DensityMatrix out = *this;
  check_shape(out.h_, shape);
  out.shape_ = std::move(shape);
  return out;
}

Weight::Weight(Hermitian h, bool positive_definite)
    : h_(std::move(h)), positive_definite_(positive_definite) {
  const SpectralDecomposition eig = hermitian_eig(h_);
  const double lam_max = eig.eigenvalues[0];
  const double lam_min = eig.eigenvalues[eig.dim() - 1];
  if (lam_min < -kPsdTol * std::max(1.0, lam_max)) {
    std::ostringstream os;
    os << "Weight: min eigenvalue " << lam_min;
    throw NotPsdError(os.str());
  }
  if (positive_definite_ && lam_min <= kSupportTol * std::max(1.0, lam_max)) {
    std::ostringstream os;
    os << "Weight: flagged positive definite but min eigenvalue is " << lam_min;
    throw NotPsdError(os.str());
  }
}

Weight Weight::from_matrix(Mat m, bool positive_definite) {
  return Weight(Hermitian(std::move(m)), positive_definite);
}

PureState::PureState(Vec amps) : amplitudes(std::move(amps)) {
  if (amplitudes.size() < 1) throw ShapeError("PureState: empty amplitude vector");
  const double n = amplitudes.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "PureState: norm " << n << " is not 1";
    throw Error(os.str());
  }
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : entries(std::move(p)) {
  if (entries.empty()) throw Error("ProbabilityVector: empty");
  double sum = 0.0;
  for (double x : entries) {
    if (x < 0.0) throw Error("ProbabilityVector: negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "ProbabilityVector: sum " << sum << " is not 1";
    throw Error(os.str());
  }
}

Mat sample_ginibre(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

DensityMatrix sample_density(int d, int rank, Rng& rng) {
  if (rank < 1 || rank > d) throw Error("sample_density: rank out of range");
  const Mat g = sample_ginibre(d, rank, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(std::move(rho));
}

Weight sample_weight(int d, Rng& rng, bool definite) {
  const Mat g = sample_ginibre(d, d, rng);
  Mat w = g * g.adjoint();
  if (definite) w += 0.1 * Mat::Identity(d, d);
  return Weight::from_matrix(std::move(w), definite);
}

Hermitian sample_hermitian(int d, Rng& rng) {
  const Mat g = sample_ginibre(d, d, rng);
  return Hermitian(0.5 * (g + g.adjoint()));
}

Mat sample_unitary(int d, Rng& rng) {
  const Mat g = sample_ginibre(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const cxd rjj = r(j, j);
    const double m = std::abs(rjj);
    if (m > 0.0) q.col(j) *= rjj / m;
  }
  return q;
}

ProbabilityVector sample_probability_vector(int r, Rng& rng) {
  std::vector<double> x(r);
  double sum = 0.0;
  for (int i = 0; i < r; ++i) {
    x[i] = -std::log(1.0 - rng.uniform01());
    sum += x[i];
  }
  for (double& v : x) v /= sum;
  return ProbabilityVector(std::move(x));
}

ClassicalInstance sample_classical_instance(const SubsystemShape& shape, Rng& rng) {
  if (shape.factors() < 2 || shape.factors() > 3)
    throw ShapeError("sample_classical_instance: shape must have 2 or 3 factors");
  const int dim = shape.dim();
  const ProbabilityVector p = sample_probability_vector(dim, rng);
  Mat rho = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) rho(i, i) = p.entries[i];

  std::vector<Weight> weights;
  weights.reserve(shape.factors());
  for (int f = 0; f < shape.factors(); ++f) {
    const int d = shape.local_dims[f];
    Mat w = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) w(i, i) = rng.uniform(0.1, 1.1);
    weights.push_back(Weight::from_matrix(std::move(w), true));
  }
  return {DensityMatrix::from_matrix(std::move(rho), shape), std::move(weights)};
}

DensityMatrix diagonal_part(const DensityMatrix& rho, const Mat& basis, double unitary_tol) {
  if (basis.rows() != rho.dim() || basis.cols() != rho.dim())
    throw ShapeError("diagonal_part: basis dimension mismatch");
  const double defect = unitarity_defect(basis);
  if (defect > unitary_tol) {
    std::ostringstream os;
    os << "diagonal_part: basis is not unitary, defect " << defect;
    throw Error(os.str());
  }
  const Mat in_basis = basis.adjoint() * rho.mat() * basis;
  const RealVec diag = in_basis.diagonal().real();
  Mat out = basis * diag.asDiagonal() * basis.adjoint();
  return DensityMatrix(Hermitian(std::move(out), 1e-10), rho.shape());
}

PureState purify(const DensityMatrix& rho_a) {
  const SpectralDecomposition eig = hermitian_eig(rho_a.herm());
  const int d = rho_a.dim();
  Vec chi = Vec::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) {
    const double c = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    if (c == 0.0) continue;
    for (int a = 0; a < d; ++a) chi[static_cast<Eigen::Index>(a) * d + i] = c * eig.eigenvectors(a, i);
  }
  chi /= chi.norm();
  return PureState(std::move(chi));
}

namespace {

// Schmidt core for d_left <= d_right.
SchmidtDecomposition schmidt_small_left(const Mat& m) {
  const int dl = static_cast<int>(m.rows());
  const int dr = static_cast<int>(m.cols());
  const SpectralDecomposition eig = hermitian_eig(Hermitian(m * m.adjoint(), 1e-8));

  SchmidtDecomposition out;
  out.coefficients.resize(dl);
  out.left = eig.eigenvectors;
  out.right = Mat::Zero(dr, dl);
  for (int k = 0; k < dl; ++k) {
    const double c = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    out.coefficients[k] = c;
    if (c > kZeroEigenvalue) {
      out.right.col(k) = m.transpose() * eig.eigenvectors.col(k).conjugate() / c;
    }
  }
  // Complete the right basis for vanishing coefficients by Gram-Schmidt over
  // computational candidates.
  for (int k = 0; k < dl; ++k) {
    if (out.coefficients[k] > kZeroEigenvalue) continue;
    for (int cand = 0; cand < dr; ++cand) {
      Vec v = Vec::Zero(dr);
      v[cand] = 1.0;
      for (int j = 0; j < dl; ++j)
        if (j != k && out.right.col(j).norm() > 0.5)
          v -= out.right.col(j) * (out.right.col(j).adjoint() * v);
      const double n = v.norm();
      if (n > 0.5) {
        out.right.col(k) = v / n;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SchmidtDecomposition schmidt(const PureState& chi, const SubsystemShape& shape) {
  if (shape.factors() != 2) throw ShapeError("schmidt: shape must have two factors");
  if (shape.dim() != chi.dim()) throw ShapeError("schmidt: shape does not match state dim");
  const int da = shape.local_dims[0];
  const int db = shape.local_dims[1];
  Mat m(da, db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) m(a, b) = chi.amplitudes[static_cast<Eigen::Index>(a) * db + b];

  if (da <= db) return schmidt_small_left(m);
  SchmidtDecomposition t = schmidt_small_left(m.transpose());
  SchmidtDecomposition out;
  out.coefficients = std::move(t.coefficients);
  out.left = std::move(t.right);
  out.right = std::move(t.left);
  return out;
}

Weight conjugate_weight(const DensityMatrix& rho, const Weight& phi) {
  if (phi.dim() != rho.dim()) throw ShapeError("conjugate_weight: dimension mismatch");
  const SpectralDecomposition eig = hermitian_eig(rho.herm());
  const int d = rho.dim();
  RealVec diag(d);
  for (int i = 0; i < d; ++i) {
    const cxd m = (eig.eigenvectors.col(i).adjoint() * phi.mat() * eig.eigenvectors.col(i)).value();
    diag[i] = std::max(m.real(), 0.0);
  }
  return Weight(Hermitian(eig.assemble(diag), 1e-10));
}

Weight cross_conjugate_weight(const DensityMatrix& rho_src, const Weight& phi_src,
                              const DensityMatrix& rho_dst, double spec_tol,
                              double degeneracy_tol) {
  if (phi_src.dim() != rho_src.dim())
    throw ShapeError("cross_conjugate_weight: weight/state dimension mismatch");
  const SpectralDecomposition src = hermitian_eig(rho_src.herm());
  const SpectralDecomposition dst = hermitian_eig(rho_dst.herm());

  int rank_src = 0, rank_dst = 0;
  while (rank_src < src.dim() && src.eigenvalues[rank_src] > kZeroEigenvalue) ++rank_src;
  while (rank_dst < dst.dim() && dst.eigenvalues[rank_dst] > kZeroEigenvalue) ++rank_dst;
  if (rank_src != rank_dst) {
    std::ostringstream os;
    os << "cross_conjugate_weight: nonzero spectra have different sizes (" << rank_src
       << " vs " << rank_dst << ")";
    throw SpectraMismatchError(os.str());
  }
  for (int i = 0; i < rank_src; ++i) {
    const double gap = std::abs(src.eigenvalues[i] - dst.eigenvalues[i]);
    if (gap > spec_tol) {
      std::ostringstream os;
      os << "cross_conjugate_weight: eigenvalue " << i << " differs by " << gap;
      throw SpectraMismatchError(os.str());
    }
  }
  for (int i = 0; i + 1 < rank_src; ++i) {
    if (src.eigenvalues[i] - src.eigenvalues[i + 1] < degeneracy_tol) {
      std::ostringstream os;
      os << "cross_conjugate_weight: eigenvalues " << i << "," << i + 1
         << " are degenerate within " << degeneracy_tol << ", pairing ambiguous";
      throw PairingAmbiguousError(os.str());
    }
  }

  RealVec diag = RealVec::Zero(dst.dim());
  for (int i = 0; i < rank_src; ++i) {
    const cxd m = (src.eigenvectors.col(i).adjoint() * phi_src.mat() * src.eigenvectors.col(i)).value();
    diag[i] = std::max(m.real(), 0.0);
  }
  return Weight(Hermitian(dst.assemble(diag), 1e-10));
}

}  // namespace wqe

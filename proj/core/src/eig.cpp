#include "wqe/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace wqe {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kConvergenceFactor = 1e-14;

double offdiag_norm(const Mat& a) {
  double s = 0.0;
  const int n = static_cast<int>(a.rows());
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// Diagonalise the 2x2 pivot block [[app, apq], [conj(apq), aqq]].
// Column 1 of the returned pair is the eigenvector of the larger eigenvalue:
// (apq, w)/n with w = (aqq - app)/2 + r, which is never negative.
struct Rotation {
  cxd g;      // apq
  double w;   // second component before normalisation
  double inv_norm;
};

Rotation pivot_rotation(double app, double aqq, cxd apq) {
  const double absq = std::abs(apq);
  const double half = 0.5 * (aqq - app);
  const double r = std::hypot(half, absq);
  // For half < 0 the sum half + r cancels; use w = |apq|^2 / (r - half).
  const double w = half >= 0.0 ? half + r : absq * absq / (r - half);
  const double n = std::hypot(absq, w);
  return {apq, w, 1.0 / n};
}

}  // namespace

Mat SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

Mat SpectralDecomposition::assemble(const RealVec& mapped) const {
  Mat m = eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  return 0.5 * (m + m.adjoint());
}

SpectralDecomposition hermitian_eig(const Mat& a, double herm_tol_factor) {
  return hermitian_eig(Hermitian(a, herm_tol_factor));
}

SpectralDecomposition hermitian_eig(const Hermitian& input) {
  const int n = input.dim();
  Mat a = input.mat();
  Mat v = Mat::Identity(n, n);

  const double scale = a.norm();
  const double stop = kConvergenceFactor * scale;

  if (n > 1 && scale > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (offdiag_norm(a) <= stop) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const cxd apq = a(p, q);
          if (std::abs(apq) == 0.0) continue;
          const Rotation rot =
              pivot_rotation(a(p, p).real(), a(q, q).real(), apq);
          const cxd g = rot.g * rot.inv_norm;
          const double w = rot.w * rot.inv_norm;

          // A <- U^dag A U with U = 1 except the (p,q) block [[g, -w],[w, conj(g)]]
          const Vec cp = a.col(p), cq = a.col(q);
          a.col(p) = g * cp + w * cq;
          a.col(q) = -w * cp + std::conj(g) * cq;
          const Eigen::RowVectorXcd rp = a.row(p), rq = a.row(q);
          a.row(p) = std::conj(g) * rp + w * rq;
          a.row(q) = -w * rp + g * rq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = cxd(a(p, p).real(), 0.0);
          a(q, q) = cxd(a(q, q).real(), 0.0);

          const Vec vp = v.col(p), vq = v.col(q);
          v.col(p) = g * vp + w * vq;
          v.col(q) = -w * vp + std::conj(g) * vq;
        }
      }
    }
    if (!converged && offdiag_norm(a) > stop) {
      std::ostringstream os;
      os << "hermitian_eig: Jacobi sweeps did not converge, off-diagonal mass "
         << offdiag_norm(a) << " vs target " << stop;
      throw Error(os.str());
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }

  // Phase convention: largest-magnitude component real positive; ties break
  // to the first index so the result is unique.
  for (int k = 0; k < n; ++k) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(out.eigenvectors(i, k));
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    if (best > 0.0) {
      const cxd z = out.eigenvectors(arg, k);
      out.eigenvectors.col(k) *= std::conj(z) / std::abs(z);
    }
  }
  return out;
}

SupportInfo support_info(const Hermitian& a, double support_tol) {
  const SpectralDecomposition eig = hermitian_eig(a);
  const double lam_max = eig.eigenvalues.size() ? eig.eigenvalues[0] : 0.0;
  const double cut = support_tol * std::max(lam_max, 0.0);
  const double lam_min = eig.eigenvalues[eig.dim() - 1];
  if (lam_min < -cut) {
    std::ostringstream os;
    os << "support_info: matrix is not PSD, min eigenvalue " << lam_min
       << " below -" << cut;
    throw NotPsdError(os.str());
  }

  const int n = eig.dim();
  RealVec proj(n), pinv(n);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (eig.eigenvalues[i] > cut) {
      proj[i] = 1.0;
      pinv[i] = 1.0 / eig.eigenvalues[i];
      ++rank;
    } else {
      proj[i] = 0.0;
      pinv[i] = 0.0;
    }
  }

  SupportInfo info;
  info.rank = rank;
  info.projector = Hermitian(eig.assemble(proj));
  info.pseudo_inverse = Hermitian(eig.assemble(pinv));
  info.threshold = cut;
  return info;
}

}  // namespace wqe

#include "wqe/matrix.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace wqe {

double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const Mat& a) {
  return max_abs(a - a.adjoint());
}

bool all_finite(const Mat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const cxd v = a(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

cxd trace_prod(const Mat& a, const Mat& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

double commutator_norm(const Mat& a, const Mat& b) {
  return (a * b - b * a).norm();
}

double unitarity_defect(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

SubsystemShape::SubsystemShape(std::vector<int> dims) : local_dims(std::move(dims)) {
  if (local_dims.empty()) throw ShapeError("subsystem shape needs at least one factor");
  for (int d : local_dims)
    if (d < 1) throw ShapeError("subsystem dimensions must be positive");
}

int SubsystemShape::dim() const {
  return std::accumulate(local_dims.begin(), local_dims.end(), 1, std::multiplies<>());
}

Hermitian::Hermitian(Mat m, double herm_tol_factor) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw ShapeError("Hermitian: matrix must be square and non-empty");
  if (!all_finite(m)) throw Error("Hermitian: matrix has non-finite entries");
  const double defect = hermiticity_defect(m);
  const double tol = herm_tol_factor * std::max(max_abs(m), 1e-300);
  if (defect > tol) {
    std::ostringstream os;
    os << "Hermitian: asymmetry " << defect << " exceeds tolerance " << tol;
    throw NotHermitianError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

}  // namespace wqe

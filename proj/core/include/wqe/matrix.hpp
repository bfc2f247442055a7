#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wqe/errors.hpp"

namespace wqe {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

// Default tolerances. Hermiticity is relative to the largest entry,
// spectral thresholds relative to the largest eigenvalue.
inline constexpr double kHermTolFactor = 1e-12;
inline constexpr double kEigTol = 1e-10;
inline constexpr double kSupportTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

double max_abs(const Mat& a);

// max_ij |a(i,j) - conj(a(j,i))|
double hermiticity_defect(const Mat& a);

bool all_finite(const Mat& a);

// tr(a*b) without forming the product.
cxd trace_prod(const Mat& a, const Mat& b);

// ||a*b - b*a||_F
double commutator_norm(const Mat& a, const Mat& b);

// ||u^dag u - 1||_F
double unitarity_defect(const Mat& u);

// Ordered list of local dimensions of a tensor-product space.
// Factor 0 is the slowest index, matching tensor().
struct SubsystemShape {
  std::vector<int> local_dims;

  SubsystemShape() = default;
  explicit SubsystemShape(std::vector<int> dims);

  int factors() const { return static_cast<int>(local_dims.size()); }
  int dim() const;
  bool operator==(const SubsystemShape&) const = default;
};

// Square complex matrix stored exactly Hermitian: the constructor checks the
// asymmetry against herm_tol_factor * max|entry| and then keeps (A + A^dag)/2.
class Hermitian {
 public:
  Hermitian() = default;
  explicit Hermitian(Mat m, double herm_tol_factor = kHermTolFactor);

  static Hermitian identity(int d) { return Hermitian(Mat::Identity(d, d)); }
  static Hermitian zero(int d) { return Hermitian(Mat::Zero(d, d)); }

  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double norm() const { return m_.norm(); }

 private:
  Mat m_;
};

}  // namespace wqe

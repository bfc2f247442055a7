#include "wqe/kernels.hpp"

#include <cmath>
#include <sstream>

#include "wqe/eig.hpp"

namespace wqe {

double log_divided_difference(double a, double b) {
  const double span = a + b;
  const double r = (a - b) / span;
  if (std::abs(r) < 1e-4) {
    // log(a/b)/(a-b) = (2/(a+b)) * atanh(r)/r, series through r^4
    const double r2 = r * r;
    return 2.0 / span * (1.0 + r2 / 3.0 + r2 * r2 / 5.0);
  }
  return std::log(a / b) / (a - b);
}

double exp_divided_difference(double a, double b) {
  const double h = 0.5 * (a - b);
  double sinhc;
  if (std::abs(h) < 1e-4) {
    const double h2 = h * h;
    sinhc = 1.0 + h2 / 6.0 * (1.0 + h2 / 20.0);
  } else {
    sinhc = std::sinh(h) / h;
  }
  return std::exp(0.5 * (a + b)) * sinhc;
}

Hermitian lieb_t(const Hermitian& a, const Hermitian& b, double support_tol) {
  const SpectralDecomposition eig = hermitian_eig(a);
  const int n = eig.dim();
  if (eig.eigenvalues[n - 1] <= support_tol) {
    std::ostringstream os;
    os << "lieb_t: matrix is singular, min eigenvalue " << eig.eigenvalues[n - 1];
    throw DomainError(os.str());
  }
  const Mat bt = eig.eigenvectors.adjoint() * b.mat() * eig.eigenvectors;
  Mat out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out(i, j) = bt(i, j) * log_divided_difference(eig.eigenvalues[i], eig.eigenvalues[j]);
  return Hermitian(eig.eigenvectors * out * eig.eigenvectors.adjoint(), 1e-10);
}

Hermitian k_w(const Hermitian& z, const Hermitian& w) {
  const SpectralDecomposition eig = hermitian_eig(z);
  const int n = eig.dim();
  const Mat wt = eig.eigenvectors.adjoint() * w.mat() * eig.eigenvectors;
  Mat out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out(i, j) = wt(i, j) * exp_divided_difference(eig.eigenvalues[i], eig.eigenvalues[j]);
  return Hermitian(eig.eigenvectors * out * eig.eigenvectors.adjoint(), 1e-10);
}

}  // namespace wqe

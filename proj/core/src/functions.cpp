#include "wqe/functions.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace wqe {

namespace {

// Eigenvalues of PSD inputs carry rounding noise of this order; xlogx and the
// PSD square root clamp them to zero instead of rejecting.
constexpr double kNegativeNoise = 1e-12;

}  // namespace

ScalarFunction::ScalarFunction(Tag tag, std::string name,
                               std::function<double(double)> value,
                               std::function<double(double)> deriv)
    : tag_(tag), name_(std::move(name)), value_(std::move(value)), deriv_(std::move(deriv)) {}

ScalarFunction ScalarFunction::xlogx() {
  return ScalarFunction(Tag::xlogx, "xlogx",
                        [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); },
                        [](double x) { return std::log(x) + 1.0; });
}

ScalarFunction ScalarFunction::exp() {
  return ScalarFunction(Tag::exp, "exp", [](double x) { return std::exp(x); },
                        [](double x) { return std::exp(x); });
}

ScalarFunction ScalarFunction::log() {
  return ScalarFunction(Tag::log, "log", [](double x) { return std::log(x); },
                        [](double x) { return 1.0 / x; });
}

ScalarFunction ScalarFunction::identity() {
  return ScalarFunction(Tag::identity, "identity", [](double x) { return x; },
                        [](double) { return 1.0; });
}

ScalarFunction ScalarFunction::convex(std::string name, std::function<double(double)> value,
                                      std::function<double(double)> deriv) {
  return ScalarFunction(Tag::user, std::move(name), std::move(value), std::move(deriv));
}

bool ScalarFunction::defined_at(double x) const {
  switch (tag_) {
    case Tag::xlogx:
      return x >= -kNegativeNoise;
    case Tag::log:
      return x > 0.0;
    default:
      return true;
  }
}

double ScalarFunction::value(double x) const {
  if (tag_ == Tag::xlogx && x < 0.0) x = 0.0;
  return value_(x);
}

double ScalarFunction::deriv(double x) const { return deriv_(x); }

ScalarFunction ScalarFunction::derivative() const {
  // The derivative is evaluated as a plain matrix function; domain checks for
  // f' (log x + 1 needs x > 0) ride on the user's preconditions.
  return ScalarFunction(Tag::user, name_ + "'", deriv_, [](double) { return 0.0; });
}

Hermitian matrix_func(const SpectralDecomposition& eig, const ScalarFunction& f) {
  const int n = eig.dim();
  RealVec mapped(n);
  for (int i = 0; i < n; ++i) {
    const double lam = eig.eigenvalues[i];
    if (!f.defined_at(lam)) {
      std::ostringstream os;
      os << "matrix_func: " << f.name() << " undefined at eigenvalue " << lam;
      throw DomainError(os.str());
    }
    mapped[i] = f.value(lam);
  }
  return Hermitian(eig.assemble(mapped));
}

Hermitian matrix_func(const Hermitian& a, const ScalarFunction& f) {
  return matrix_func(hermitian_eig(a), f);
}

Hermitian log_on_support(const SpectralDecomposition& eig, double support_tol) {
  const int n = eig.dim();
  const double lam_max = std::max(eig.eigenvalues[0], 0.0);
  const double cut = support_tol * lam_max;
  RealVec mapped(n);
  for (int i = 0; i < n; ++i) {
    const double lam = eig.eigenvalues[i];
    if (lam < -cut) {
      std::ostringstream os;
      os << "log_on_support: eigenvalue " << lam << " below -" << cut;
      throw NotPsdError(os.str());
    }
    mapped[i] = lam <= cut ? 0.0 : std::log(lam);
  }
  return Hermitian(eig.assemble(mapped));
}

Hermitian log_on_support(const Hermitian& a, double support_tol) {
  return log_on_support(hermitian_eig(a), support_tol);
}

Hermitian sqrt_psd(const Hermitian& w) {
  const SpectralDecomposition eig = hermitian_eig(w);
  const double lam_max = std::max(eig.eigenvalues[0], 0.0);
  const double tol = kNegativeNoise * std::max(lam_max, 1.0);
  const int n = eig.dim();
  RealVec mapped(n);
  for (int i = 0; i < n; ++i) {
    const double lam = eig.eigenvalues[i];
    if (lam < -tol) {
      std::ostringstream os;
      os << "sqrt_psd: eigenvalue " << lam << " below -" << tol;
      throw NotPsdError(os.str());
    }
    mapped[i] = lam <= 0.0 ? 0.0 : std::sqrt(lam);
  }
  return Hermitian(eig.assemble(mapped));
}

}  // namespace wqe

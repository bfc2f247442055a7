#pragma once

#include <functional>
#include <string>

#include "wqe/eig.hpp"
#include "wqe/matrix.hpp"

namespace wqe {

// Real scalar function applied through the spectral calculus. The built-in
// tags cover everything the checkers need; `convex` wraps a user-supplied
// value/derivative pair. xlogx uses the 0*log 0 = 0 convention and the
// natural logarithm throughout.
class ScalarFunction {
 public:
  enum class Tag { xlogx, exp, log, identity, user };

  static ScalarFunction xlogx();
  static ScalarFunction exp();
  static ScalarFunction log();
  static ScalarFunction identity();
  static ScalarFunction convex(std::string name, std::function<double(double)> value,
                               std::function<double(double)> deriv);

  Tag tag() const { return tag_; }
  const std::string& name() const { return name_; }

  bool defined_at(double x) const;
  double value(double x) const;
  double deriv(double x) const;

  // Same function with value() replaced by deriv(); used for f'(X).
  ScalarFunction derivative() const;

 private:
  ScalarFunction(Tag tag, std::string name, std::function<double(double)> value,
                 std::function<double(double)> deriv);

  Tag tag_;
  std::string name_;
  std::function<double(double)> value_;
  std::function<double(double)> deriv_;
};

// f(A) = V diag(f(lambda)) V^dag. Throws DomainError naming the eigenvalue
// if f is undefined somewhere on the spectrum.
Hermitian matrix_func(const Hermitian& a, const ScalarFunction& f);
Hermitian matrix_func(const SpectralDecomposition& eig, const ScalarFunction& f);

// Logarithm restricted to the support: eigenvalues at or below
// support_tol * lambda_max map to 0, realising A log A -> 0 on the null
// space. Eigenvalues below -support_tol * lambda_max reject the input.
Hermitian log_on_support(const Hermitian& a, double support_tol = kSupportTol);
Hermitian log_on_support(const SpectralDecomposition& eig, double support_tol = kSupportTol);

// Principal PSD square root L with L*L = W.
Hermitian sqrt_psd(const Hermitian& w);

}  // namespace wqe

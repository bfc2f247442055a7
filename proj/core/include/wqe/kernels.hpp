#pragma once

#include "wqe/matrix.hpp"

namespace wqe {

// (log a - log b) / (a - b) for a, b > 0; continuous value 2/(a+b) near the
// diagonal (the derivative of log at the midpoint), evaluated by series so
// the kernel stays symmetric and smooth through degeneracies.
double log_divided_difference(double a, double b);

// (e^a - e^b) / (a - b); e^{(a+b)/2} * sinh(h)/h with h = (a-b)/2.
double exp_divided_difference(double a, double b);

// T_A(B) = integral_0^inf (A + w)^{-1} B (A + w)^{-1} dw, evaluated exactly
// in A's eigenbasis: entry (i,j) of V^dag B V is multiplied by the log
// divided difference of the eigenvalues. Requires A positive definite
// (all eigenvalues > support_tol).
Hermitian lieb_t(const Hermitian& a, const Hermitian& b, double support_tol = kSupportTol);

// K_W(Z) = sum_{n>=0} 1/(n+1)! sum_{l=0}^n Z^{n-l} W Z^l, equivalently
// integral_0^1 e^{sZ} W e^{(1-s)Z} ds; evaluated exactly in Z's eigenbasis
// with the exp divided-difference kernel.
Hermitian k_w(const Hermitian& z, const Hermitian& w);

}  // namespace wqe

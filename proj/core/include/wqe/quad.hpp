#pragma once

#include "wqe/matrix.hpp"

namespace wqe {

// Independent quadrature oracles for the two kernel transforms. Both evaluate
// the defining integrals with adaptive Simpson subdivision on matrix values
// (Frobenius-norm error control) and deliberately avoid the eigenbasis route:
// resolvents come from LU inverses, matrix exponentials from a Pade
// scaling-and-squaring implementation. Throws OracleFailureError if the
// requested tolerance is not reached within the subdivision budget.

// integral_0^inf (A + w)^{-1} B (A + w)^{-1} dw, via the substitution
// w = t/(1-t) which turns the integrand into C(t)^{-1} B C(t)^{-1} with
// C(t) = (1-t) A + t.
Mat quad_oracle_lieb_t(const Mat& a, const Mat& b, double tol = 1e-9);

// integral_0^1 e^{sZ} W e^{(1-s)Z} ds.
Mat quad_oracle_k_w(const Mat& z, const Mat& w, double tol = 1e-10);

// Truncated double sum sum_{n<=order} 1/(n+1)! sum_{l=0}^n Z^{n-l} W Z^l.
Mat series_k_w(const Mat& z, const Mat& w, int order = 30);

}  // namespace wqe

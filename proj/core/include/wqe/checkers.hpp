#pragma once

#include "wqe/functions.hpp"
#include "wqe/rng.hpp"
#include "wqe/verdict.hpp"

namespace wqe {

// One checker per statement. Checkers evaluate side conditions, both sides of
// the inequality, the slack and equality-case diagnostics; they never assert,
// the Verdict carries everything. Default tolerances: slack 1e-9 absolute,
// commutators 1e-10, conjugacy matching 1e-8.

inline constexpr double kSlackTol = 1e-9;
inline constexpr double kCommutatorTol = 1e-10;
inline constexpr double kConjugacyTol = 1e-8;

// tr(W(f(Y) - f(X))) >= tr(W(Y - X) f'(X)) for convex f. In sandwiched mode
// the right side is tr(L Y L f'(X)) - tr(W X f'(X)) with L = sqrt_psd(W),
// which is the form the decomposition proof actually yields.
Verdict check_klein(const Weight& w, const Hermitian& x, const Hermitian& y,
                    const ScalarFunction& f, TraceMode mode, double tol = kSlackTol);

// D_phi(rho || sigma) >= 0 under tr(phi rho) >= tr(phi sigma).
Verdict check_gibbs(const DensityMatrix& rho, const Hermitian& sigma, const Weight& phi,
                    TraceMode mode, double tol = kSlackTol);

// Nonnegativity, the zero characterisation, and the upper bound of the
// weighted entropy. Three upper-bound values are reported (the stated
// (log m) tr phi, the direct S_phi(P/m), and the derived (log m) tr(phi rho));
// the slack is asserted against the derived bound for positive definite phi.
Verdict check_entropy_bounds(const DensityMatrix& rho, const Weight& phi,
                             double tol = kSlackTol);

// S_{phi_A}(rho_A) = S_{phi_R}(rho_R) across a purification, with the
// reference weight transported by descending-eigenvalue pairing. For a
// two-factor rho the corollary equalities on R and BR are verified as well.
Verdict check_purification(const DensityMatrix& rho_a, const Weight& phi_a,
                           double tol = kSlackTol);

// S_psi(rho^d) >= S_phi(rho) under tr(phi rho) >= tr(phi rho^d), where rho^d
// is the diagonal part of rho in the given basis.
Verdict check_diagonalisation(const DensityMatrix& rho, const Weight& phi, const Mat& basis,
                              double tol = kSlackTol);

// S_{phi_A (x) phi_B}(rho_AB) <= S_{psi_A}(rho_A) + S_{psi_B}(rho_B) under
// tr(phi_AB rho_AB) >= tr(phi_A rho_A) tr(phi_B rho_B).
Verdict check_subadditivity(const DensityMatrix& rho_ab, const Weight& phi_a,
                            const Weight& phi_b, TraceMode mode, double tol = kSlackTol);

// Concavity of the weighted entropy over a finite mixture, plus the exact
// block-construction identity S_{phi (x) 1}(rho) = sum_l b_l S_phi(rho_l) + h_B(b).
Verdict check_concavity(const std::vector<DensityMatrix>& states, const ProbabilityVector& b,
                        const Weight& phi, double tol = kSlackTol);

// Weighted Araki-Lieb: purifies rho_AB, samples trial weights on BR (and AR
// for the mirrored inequality), tests membership numerically and asserts
// S_phi(rho) >= S_{psi_A}(rho_A) - S_{psi_B}(rho_B) for every admissible
// candidate. Reports how many candidates were admissible.
Verdict check_araki_lieb(const DensityMatrix& rho_ab, const Weight& phi_ab, int candidates,
                         Rng& rng, double tol = kSlackTol);

// Strong subadditivity under condition (i) (the trace condition with
// rho_B^{-1} taken on the support) and condition (ii) (the two commutators,
// accepted in the stated or the A<->C interchanged form).
Verdict check_ssa(const DensityMatrix& rho_abc, const Weight& phi_a, const Weight& phi_b,
                  const Weight& phi_c, TraceMode mode, double tol = kSlackTol);

// tr(W e^{X+Y+Z}) <= tr(K_W(Z) T_{exp(-X)}(e^Y)).
Verdict check_lieb_triple(const Weight& w, const Hermitian& x, const Hermitian& y,
                          const Hermitian& z, double tol = kSlackTol);

}  // namespace wqe

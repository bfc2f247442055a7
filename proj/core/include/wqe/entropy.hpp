#pragma once

#include <string>
#include <vector>

#include "wqe/states.hpp"

namespace wqe {

// How a weighted trace with three mutually non-commuting Hermitian factors is
// evaluated. literal takes Re tr(phi A B) and reports |Im| as a residue;
// sandwiched replaces the weighted term by tr(L A L B) with L the principal
// square root of phi, which is exactly real for Hermitian A, B.
enum class TraceMode { literal, sandwiched };

const char* trace_mode_name(TraceMode mode);
TraceMode trace_mode_from_name(const std::string& name);

struct EntropyValue {
  double value = 0.0;
  double imag_residue = 0.0;
  bool infinite = false;  // support-violation signal of the relative entropy

  bool is_infinite() const { return infinite; }
};

// S_phi(rho) = -tr(phi rho log rho); exactly real as a two-Hermitian trace.
EntropyValue weighted_entropy(const DensityMatrix& rho, const Weight& phi);

// D_phi(rho || sigma) = tr(phi rho log rho) - tr(phi rho log sigma).
// In sandwiched mode the second term becomes tr(L rho L log sigma).
// If rho's support leaks out of sigma's, the distinguished infinite value is
// returned instead of an error so campaigns can tabulate it.
EntropyValue weighted_relative_entropy(const DensityMatrix& rho, const Hermitian& sigma,
                                       const Weight& phi, TraceMode mode,
                                       double support_tol = kSupportTol);

// S_psi(rho_keep) for the implicit reduced weight psi solving
// psi rho_keep = tr_rest(phi rho): evaluated directly as
// -Re tr( tr_rest(phi rho) log rho_keep ) without forming psi.
EntropyValue reduced_weighted_entropy(const DensityMatrix& rho_joint, const Weight& phi_joint,
                                      const SubsystemShape& shape, const std::vector<int>& keep);

// Sandwiched variant: -tr( tr_rest(L rho L) log rho_keep ), exactly real.
EntropyValue sandwiched_reduced_entropy(const DensityMatrix& rho_joint, const Weight& phi_joint,
                                        const SubsystemShape& shape,
                                        const std::vector<int>& keep);

// h_B(b) = -sum_l B_l b_l log b_l with the 0 log 0 convention.
double weighted_shannon(const ProbabilityVector& b, const std::vector<double>& weights);

}  // namespace wqe

#pragma once

#include <optional>
#include <string>

#include "wqe/checkers.hpp"

namespace wqe {

// Sample families for campaign instances. `generic` draws Ginibre-induced
// states and shifted-Wishart weights; `classical` makes everything diagonal
// in the computational product basis; `commuting_weight` gives the weight a
// common eigenbasis with the state it must commute with; `product_state` and
// `pure_state` restrict the state ensemble.
enum class Ensemble { generic, classical, commuting_weight, product_state, pure_state };

const char* ensemble_name(Ensemble e);
Ensemble ensemble_from_name(const std::string& name);

struct InstanceOptions {
  Ensemble ensemble = Ensemble::generic;
  TraceMode mode = TraceMode::sandwiched;
  double tolerance = kSlackTol;
  int candidates = 8;  // araki_lieb: trial weights per orientation
  int blocks = 3;      // concavity: mixture size
  bool identity_weights = false;
  std::optional<Mat> state_override;
  std::optional<Mat> weight_override;
};

// Rejects meaningless (theorem, shape, ensemble, override) combinations.
void validate_combination(TheoremId theorem, const SubsystemShape& shape,
                          const InstanceOptions& opts);

// Generates the instance keyed by `stream` and runs the checker. The result
// depends only on (theorem, shape, opts, stream), never on who calls it.
Verdict run_instance(TheoremId theorem, const SubsystemShape& shape,
                     const InstanceOptions& opts, RngStream stream);

// Campaign-scale samplers (weights normalised to unit Frobenius norm so the
// absolute slack tolerance is meaningful).
Weight campaign_weight(int d, Rng& rng);
Hermitian campaign_pd_hermitian(int d, Rng& rng);
Hermitian campaign_gauss_hermitian(int d, Rng& rng);

}  // namespace wqe

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqe/campaign.hpp"

namespace wqe {

// Counterexample search over hand-built instance families. Targets either
// break a stated side condition on purpose (demonstrating the condition is
// necessary) or keep it satisfied and look for genuine violations.
//
//   gibbs-trace-condition            diagonal d=2 family with the trace
//                                    condition broken; violations exist
//   diagonalisation-trace-condition  generic instances with the trace
//                                    condition broken
//   klein-literal-noncommuting       literal-mode Klein on non-commuting
//                                    triples (the unproven reading)
//   subadditivity-condition-satisfied  condition-satisfying generic
//                                    instances; exhaustion expected
//   lieb-triple-weighted             generic-weight triple inequality;
//                                    genuine violations exist and are found
std::vector<std::string> known_search_targets();

struct SearchConfig {
  std::string target;
  SubsystemShape shape{std::vector<int>{2}};
  std::uint64_t max_trials = 10000;
  std::uint64_t seed = 0;
  double tolerance = kSlackTol;
  std::string output_path;  // evaluated trials are appended when set
};

struct SearchOutcome {
  bool found = false;
  std::uint64_t trials = 0;           // instances evaluated
  std::optional<ResultRecord> hit;    // first record with slack < -tolerance
  bool genuine_failure = false;       // hit with all side conditions satisfied
};

SearchOutcome search_counterexample(const SearchConfig& config);

}  // namespace wqe

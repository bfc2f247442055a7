#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "wqe/records.hpp"

namespace wqe {

struct TheoremSummary {
  std::uint64_t total = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t infinite = 0;
  double min_slack = 0.0;
  double p1_slack = 0.0;
  double median_slack = 0.0;
  double max_imag_residue = 0.0;
  double condition_rate = 1.0;  // fraction of records with all conditions ok
};

struct FileSummary {
  std::map<std::string, TheoremSummary> per_theorem;
  std::uint64_t records = 0;
  std::uint64_t headers = 0;
  std::uint64_t malformed = 0;
  std::vector<std::string> warnings;

  bool any_failures() const;
  std::string render() const;   // human-readable report
  std::string to_json() const;  // machine summary
};

// Malformed lines are reported with their line number and skipped.
FileSummary summarize_stream(std::istream& in);
FileSummary summarize_file(const std::string& path);

}  // namespace wqe

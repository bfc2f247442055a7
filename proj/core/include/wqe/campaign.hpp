#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wqe/instances.hpp"
#include "wqe/records.hpp"

namespace wqe {

struct CampaignConfig {
  TheoremId theorem = TheoremId::gibbs;
  SubsystemShape shape{std::vector<int>{2}};
  std::uint64_t samples = 100;
  std::uint64_t seed = 0;
  InstanceOptions options;
  std::string output_path;  // empty: keep records in memory only
};

void validate(const CampaignConfig& config);

// Canonical serialisation of everything that affects verdicts (the output
// path and worker count deliberately do not).
std::string config_canonical(const CampaignConfig& config);
std::string config_hash(const CampaignConfig& config);
std::string config_json(const CampaignConfig& config);

struct CampaignSummary {
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t infinite = 0;
  double min_slack = 0.0;
  double max_imag_residue = 0.0;
  double wall_seconds = 0.0;

  bool all_ok() const { return failed == 0; }
};

// Runs `samples` instances; instance i is generated from RngStream(seed, i)
// so the record stream is identical no matter how many workers run. Records
// are appended to output_path (with a header line) when it is set, and copied
// to *out_records when that is non-null. Worker count comes from WQE_THREADS,
// defaulting to the hardware concurrency.
CampaignSummary run_campaign(const CampaignConfig& config,
                             std::vector<ResultRecord>* out_records = nullptr);

unsigned worker_count(std::uint64_t samples);

}  // namespace wqe

#include "wqe/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wqe/version.hpp"

namespace wqe {

void validate(const CampaignConfig& config) {
  if (config.samples < 1) throw ConfigError("samples must be at least 1");
  validate_combination(config.theorem, config.shape, config.options);
}

std::string config_canonical(const CampaignConfig& c) {
  std::ostringstream os;
  os << theorem_name(c.theorem) << "|";
  for (size_t i = 0; i < c.shape.local_dims.size(); ++i)
    os << (i ? "x" : "") << c.shape.local_dims[i];
  os << "|" << ensemble_name(c.options.ensemble) << "|" << c.samples << "|" << c.seed << "|"
     << trace_mode_name(c.options.mode) << "|" << c.options.tolerance << "|"
     << c.options.candidates << "|" << c.options.blocks << "|"
     << (c.options.identity_weights ? 1 : 0) << "|"
     << (c.options.state_override ? "state" : "-") << "|"
     << (c.options.weight_override ? "weight" : "-");
  return os.str();
}

std::string config_hash(const CampaignConfig& c) { return fnv1a_hex(config_canonical(c)); }

std::string config_json(const CampaignConfig& c) {
  nlohmann::json dims = nlohmann::json::array();
  for (int d : c.shape.local_dims) dims.push_back(d);
  nlohmann::json j{{"theorem", theorem_name(c.theorem)},
                   {"dims", dims},
                   {"ensemble", ensemble_name(c.options.ensemble)},
                   {"samples", c.samples},
                   {"seed", c.seed},
                   {"mode", trace_mode_name(c.options.mode)},
                   {"tol", c.options.tolerance},
                   {"candidates", c.options.candidates},
                   {"blocks", c.options.blocks},
                   {"identity_weights", c.options.identity_weights},
                   {"config_hash", config_hash(c)}};
  return j.dump();
}

unsigned worker_count(std::uint64_t samples) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("WQE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<unsigned>(v);
  }
  if (samples < n) n = static_cast<unsigned>(samples);
  return std::max(n, 1u);
}

CampaignSummary run_campaign(const CampaignConfig& config,
                             std::vector<ResultRecord>* out_records) {
  validate(config);
  const auto t0 = std::chrono::steady_clock::now();
  const std::string hash = config_hash(config);

  std::vector<ResultRecord> records(config.samples);
  std::atomic<std::uint64_t> next{0};
  const unsigned workers = worker_count(config.samples);

  auto work = [&]() {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= config.samples) return;
      ResultRecord& r = records[i];
      try {
        r.verdict = run_instance(config.theorem, config.shape, config.options,
                                 RngStream{config.seed, i});
      } catch (const Error& e) {
        // A failed instance must still produce its record; it is vacuous
        // (nothing was evaluated), never a theorem failure.
        r.verdict = Verdict{};
        r.verdict.theorem = config.theorem;
        r.verdict.seed = config.seed;
        r.verdict.stream_index = i;
        r.verdict.mode = config.options.mode;
        r.verdict.add_condition("checker_error", 0.0, false);
        r.verdict.finalize(config.options.tolerance);
        r.error = e.what();
      }
      r.config_hash = hash;
      r.timestamp = iso8601_now();
      r.version = kVersion;
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::app);
    if (!out) throw ConfigError("cannot write output path: " + config.output_path);
    out << results_header_line(config_json(config)) << "\n";
    for (const auto& r : records) out << r.to_json_line() << "\n";
  }

  CampaignSummary summary;
  summary.samples = config.samples;
  summary.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (r.verdict.vacuous)
      ++summary.vacuous;
    else if (r.verdict.pass)
      ++summary.passed;
    else
      ++summary.failed;
    if (std::isinf(r.verdict.slack) && r.verdict.slack > 0) ++summary.infinite;
    if (std::isfinite(r.verdict.slack))
      summary.min_slack = std::min(summary.min_slack, r.verdict.slack);
    summary.max_imag_residue =
        std::max(summary.max_imag_residue, r.verdict.max_imag_residue());
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (out_records) *out_records = std::move(records);
  return summary;
}

}  // namespace wqe

// wqe: verify, search, summarize and demo the weighted-entropy inequalities.
//
// Exit codes: 0 all records pass or are vacuous, 1 at least one genuine
// failure, 2 configuration error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wqe/campaign.hpp"
#include "wqe/demo.hpp"
#include "wqe/search.hpp"
#include "wqe/summary.hpp"
#include "wqe/version.hpp"

namespace {

wqe::SubsystemShape parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    try {
      dims.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw wqe::ConfigError("bad --dims value: " + text);
    }
  }
  if (dims.empty()) throw wqe::ConfigError("bad --dims value: " + text);
  return wqe::SubsystemShape(dims);
}

int cmd_verify(const std::string& theorem, const std::string& dims,
               const std::string& ensemble, std::uint64_t samples, std::uint64_t seed,
               const std::string& mode, double tol, const std::string& out,
               int candidates, int blocks, bool identity_weights,
               const std::string& state_file, const std::string& weight_file) {
  const auto id = wqe::theorem_from_name(theorem);
  if (!id) throw wqe::ConfigError("unknown theorem: " + theorem);

  wqe::CampaignConfig config;
  config.theorem = *id;
  config.shape = parse_dims(dims);
  config.samples = samples;
  config.seed = seed;
  config.output_path = out;
  config.options.ensemble = wqe::ensemble_from_name(ensemble);
  config.options.mode = wqe::trace_mode_from_name(mode);
  config.options.tolerance = tol;
  config.options.candidates = candidates;
  config.options.blocks = blocks;
  config.options.identity_weights = identity_weights;
  if (!state_file.empty())
    config.options.state_override = wqe::read_matrix_file(state_file).matrix;
  if (!weight_file.empty())
    config.options.weight_override = wqe::read_matrix_file(weight_file).matrix;

  const wqe::CampaignSummary s = wqe::run_campaign(config);
  std::cout << "theorem " << theorem << ": " << s.samples << " samples, " << s.passed
            << " pass, " << s.failed << " fail, " << s.vacuous << " vacuous";
  if (s.infinite > 0) std::cout << " (" << s.infinite << " infinite divergences)";
  std::cout << "\nmin slack " << s.min_slack << ", max |Im| residue " << s.max_imag_residue
            << ", wall " << s.wall_seconds << " s\n";
  if (!out.empty()) std::cout << "records appended to " << out << "\n";
  return s.failed == 0 ? 0 : 1;
}

int cmd_search(const std::string& target, const std::string& dims, std::uint64_t max_trials,
               std::uint64_t seed, double tol, const std::string& out) {
  wqe::SearchConfig config;
  config.target = target;
  config.shape = parse_dims(dims);
  config.max_trials = max_trials;
  config.seed = seed;
  config.tolerance = tol;
  config.output_path = out;

  const wqe::SearchOutcome o = wqe::search_counterexample(config);
  if (o.found) {
    std::cout << "violation found after " << o.trials << " evaluated trials:\n"
              << o.hit->to_json_line() << "\n";
    if (o.genuine_failure) {
      std::cout << "all side conditions were satisfied: this is a genuine failure\n";
      return 1;
    }
    std::cout << "side conditions were broken by construction; the inequality does not "
                 "apply (vacuous record)\n";
    return 0;
  }
  std::cout << "exhausted " << o.trials << " evaluated trials (max " << max_trials
            << ") without a violation\n";
  return 0;
}

int cmd_summarize(const std::string& path, bool as_json) {
  const wqe::FileSummary s = wqe::summarize_file(path);
  std::cout << (as_json ? s.to_json() + "\n" : s.render());
  return s.any_failures() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-entropy inequality verifier"};
  app.set_version_flag("--version", wqe::kVersion);
  app.require_subcommand(1);

  std::string theorem, dims = "2", ensemble = "generic", mode = "sandwiched";
  std::string out, state_file, weight_file, target, path;
  std::uint64_t samples = 1000, seed = 0, max_trials = 10000;
  double tol = 1e-9;
  int candidates = 8, blocks = 3;
  bool identity_weights = false, as_json = false;

  auto* verify = app.add_subcommand("verify", "run a seeded checker campaign");
  verify->add_option("theorem", theorem,
                     "klein|gibbs|bounds|purification|diagonalisation|subadditivity|"
                     "concavity|araki_lieb|ssa|lieb_triple")
      ->required();
  verify->add_option("--dims", dims, "local dimensions, e.g. 4 or 2x3 or 2x2x2");
  verify->add_option("--ensemble", ensemble,
                     "generic|classical|commuting-weight|product-state|pure-state");
  verify->add_option("--samples", samples, "instances to run");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--mode", mode, "literal|sandwiched");
  verify->add_option("--tol", tol, "slack tolerance");
  verify->add_option("--out", out, "append JSON-line records here");
  verify->add_option("--candidates", candidates, "araki_lieb: trial weights per orientation");
  verify->add_option("--blocks", blocks, "concavity: mixture size");
  verify->add_flag("--identity-weight", identity_weights, "use identity weights");
  verify->add_option("--state", state_file, "matrix file overriding the sampled state");
  verify->add_option("--weight", weight_file, "matrix file overriding the sampled weight");

  auto* search = app.add_subcommand("search", "look for counterexamples");
  std::string targets_help;
  for (const auto& t : wqe::known_search_targets()) targets_help += t + " ";
  search->add_option("target", target, targets_help)->required();
  search->add_option("--dims", dims, "local dimensions");
  search->add_option("--max-trials", max_trials, "trial budget");
  search->add_option("--seed", seed, "search seed");
  search->add_option("--tol", tol, "violation threshold");
  search->add_option("--out", out, "append evaluated trial records here");

  auto* summarize = app.add_subcommand("summarize", "aggregate a record file");
  summarize->add_option("path", path, "record file")->required();
  summarize->add_flag("--json", as_json, "machine-readable summary");

  auto* demo = app.add_subcommand("demo", "worked small-dimension examples");
  (void)demo;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly, bad usage is a config error
  }

  try {
    if (verify->parsed())
      return cmd_verify(theorem, dims, ensemble, samples, seed, mode, tol, out, candidates,
                        blocks, identity_weights, state_file, weight_file);
    if (search->parsed()) return cmd_search(target, dims, max_trials, seed, tol, out);
    if (summarize->parsed()) return cmd_summarize(path, as_json);
    if (demo->parsed()) return wqe::run_demo(std::cout) == 0 ? 0 : 1;
  } catch (const wqe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const wqe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

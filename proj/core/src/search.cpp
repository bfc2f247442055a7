#include "wqe/search.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "wqe/tensor.hpp"
#include "wqe/version.hpp"

namespace wqe {

namespace {

Verdict gibbs_condition_broken(const SubsystemShape& shape, double tol, Rng& rng) {
  const int d = shape.dim();
  if (d == 2) {
    // diag(p, 1-p) vs diag(q, 1-q) with weight diag(w_hi, w_lo): ordering
    // p < q and w_hi > w_lo breaks the trace condition on every draw.
    double p = rng.uniform(0.05, 0.95), q = rng.uniform(0.05, 0.95);
    if (p > q) std::swap(p, q);
    double w1 = rng.uniform(0.2, 5.0), w2 = rng.uniform(0.2, 5.0);
    if (w1 < w2) std::swap(w1, w2);
    Mat rho = Mat::Zero(2, 2), sigma = Mat::Zero(2, 2), phi = Mat::Zero(2, 2);
    rho(0, 0) = p;
    rho(1, 1) = 1.0 - p;
    sigma(0, 0) = q;
    sigma(1, 1) = 1.0 - q;
    phi(0, 0) = w1;
    phi(1, 1) = w2;
    return check_gibbs(DensityMatrix::from_matrix(rho), Hermitian(sigma),
                       Weight::from_matrix(phi, true), TraceMode::literal, tol);
  }
  // General diagonal family: orient the pair so the condition is broken.
  const ProbabilityVector pr = sample_probability_vector(d, rng);
  const ProbabilityVector ps = sample_probability_vector(d, rng);
  Mat rho = Mat::Zero(d, d), sigma = Mat::Zero(d, d), phi = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    rho(i, i) = pr.entries[i];
    sigma(i, i) = ps.entries[i];
    phi(i, i) = rng.uniform(0.2, 5.0);
  }
  if ((phi * (rho - sigma)).trace().real() > 0.0) rho.swap(sigma);
  return check_gibbs(DensityMatrix::from_matrix(rho), Hermitian(sigma),
                     Weight::from_matrix(phi, true), TraceMode::literal, tol);
}

std::optional<Verdict> diagonalisation_condition_broken(const SubsystemShape& shape,
                                                        double tol, Rng& rng) {
  const int d = shape.dim();
  const DensityMatrix rho = sample_density(d, d, rng);
  const Weight phi = campaign_weight(d, rng);
  const Mat basis = sample_unitary(d, rng);
  const Verdict v = check_diagonalisation(rho, phi, basis, tol);
  // Engineered family: keep only instances where the condition came out
  // violated; the rest cannot witness anything.
  for (const auto& c : v.conditions)
    if (c.name == "trace_condition" && c.ok) return std::nullopt;
  return v;
}

Verdict klein_literal(const SubsystemShape& shape, double tol, Rng& rng) {
  const int d = shape.dim();
  const Weight w = campaign_weight(d, rng);
  const Hermitian x = campaign_pd_hermitian(d, rng);
  const Hermitian y = campaign_pd_hermitian(d, rng);
  return check_klein(w, x, y, ScalarFunction::xlogx(), TraceMode::literal, tol);
}

std::optional<Verdict> subadditivity_condition_kept(const SubsystemShape& shape, double tol,
                                                    RngStream stream) {
  InstanceOptions opts;
  opts.ensemble = Ensemble::generic;
  opts.mode = TraceMode::sandwiched;
  opts.tolerance = tol;
  Verdict v = run_instance(TheoremId::subadditivity, shape, opts, stream);
  if (v.vacuous) return std::nullopt;
  return v;
}

Verdict lieb_triple_weighted(const SubsystemShape& shape, double tol, Rng& rng) {
  const int d = shape.dim();
  return check_lieb_triple(campaign_weight(d, rng), campaign_gauss_hermitian(d, rng),
                           campaign_gauss_hermitian(d, rng), campaign_gauss_hermitian(d, rng),
                           tol);
}

}  // namespace

std::vector<std::string> known_search_targets() {
  return {"gibbs-trace-condition", "diagonalisation-trace-condition",
          "klein-literal-noncommuting", "subadditivity-condition-satisfied",
          "lieb-triple-weighted"};
}

SearchOutcome search_counterexample(const SearchConfig& config) {
  const auto targets = known_search_targets();
  if (std::find(targets.begin(), targets.end(), config.target) == targets.end())
    throw ConfigError("unknown search target: " + config.target);
  if (config.target == "subadditivity-condition-satisfied" && config.shape.factors() != 2)
    throw ConfigError("subadditivity search needs a 2-factor shape");

  std::ofstream out;
  if (!config.output_path.empty()) {
    out.open(config.output_path, std::ios::app);
    if (!out) throw ConfigError("cannot write output path: " + config.output_path);
    nlohmann::json cfg{{"search_target", config.target},
                       {"seed", config.seed},
                       {"max_trials", config.max_trials},
                       {"tol", config.tolerance}};
    out << results_header_line(cfg.dump()) << "\n";
  }

  SearchOutcome outcome;
  for (std::uint64_t i = 0; i < config.max_trials; ++i) {
    const RngStream stream{config.seed, i};
    Rng rng(stream);
    std::optional<Verdict> v;
    if (config.target == "gibbs-trace-condition") {
      v = gibbs_condition_broken(config.shape, config.tolerance, rng);
    } else if (config.target == "diagonalisation-trace-condition") {
      v = diagonalisation_condition_broken(config.shape, config.tolerance, rng);
    } else if (config.target == "klein-literal-noncommuting") {
      v = klein_literal(config.shape, config.tolerance, rng);
    } else if (config.target == "lieb-triple-weighted") {
      v = lieb_triple_weighted(config.shape, config.tolerance, rng);
    } else {
      v = subadditivity_condition_kept(config.shape, config.tolerance, stream);
    }
    if (!v) continue;
    ++outcome.trials;
    v->seed = config.seed;
    v->stream_index = i;

    ResultRecord r;
    r.verdict = *v;
    r.config_hash = fnv1a_hex(config.target + "|" + std::to_string(config.seed));
    r.timestamp = iso8601_now();
    r.version = kVersion;
    if (out.is_open()) out << r.to_json_line() << "\n";

    if (v->slack < -config.tolerance) {
      outcome.found = true;
      outcome.genuine_failure = !v->vacuous;
      outcome.hit = std::move(r);
      break;
    }
  }
  return outcome;
}

}  // namespace wqe

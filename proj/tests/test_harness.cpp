#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "wqe/campaign.hpp"
#include "wqe/demo.hpp"
#include "wqe/search.hpp"
#include "wqe/summary.hpp"

using namespace wqe;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string("/tmp/wqe_test_") + std::to_string(::getpid()) + "_" + name;
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct EnvThreads {
  explicit EnvThreads(const char* value) { ::setenv("WQE_THREADS", value, 1); }
  ~EnvThreads() { ::unsetenv("WQE_THREADS"); }
};

CampaignConfig small_gibbs(std::uint64_t samples, std::uint64_t seed) {
  CampaignConfig c;
  c.theorem = TheoremId::gibbs;
  c.shape = SubsystemShape({4});
  c.samples = samples;
  c.seed = seed;
  c.options.mode = TraceMode::sandwiched;
  return c;
}

}  // namespace

TEST_CASE("campaign runs are deterministic and complete") {
  std::vector<ResultRecord> first, second;
  const CampaignConfig c = small_gibbs(50, 42);
  const CampaignSummary s1 = run_campaign(c, &first);
  const CampaignSummary s2 = run_campaign(c, &second);
  CHECK(first.size() == 50);
  CHECK(second.size() == 50);
  CHECK(s1.passed == s2.passed);
  CHECK(s1.failed == 0);
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].same_verdict(second[i]));
    CHECK(first[i].verdict.stream_index == i);
  }
}

TEST_CASE("campaign records are identical under 1 worker and 8 workers") {
  std::vector<ResultRecord> serial, parallel;
  const CampaignConfig c = small_gibbs(40, 7);
  {
    EnvThreads one("1");
    CHECK(worker_count(c.samples) == 1);
    run_campaign(c, &serial);
  }
  {
    EnvThreads eight("8");
    CHECK(worker_count(c.samples) == 8);
    run_campaign(c, &parallel);
  }
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].same_verdict(parallel[i]));
}

TEST_CASE("campaign appends a header plus one line per sample") {
  TempFile tmp("campaign.jsonl");
  CampaignConfig c = small_gibbs(12, 3);
  c.output_path = tmp.path;
  run_campaign(c);

  std::ifstream in(tmp.path);
  std::string line;
  std::size_t lines = 0, headers = 0;
  while (std::getline(in, line)) {
    if (is_results_header(line)) ++headers;
    ++lines;
  }
  CHECK(headers == 1);
  CHECK(lines == 13);
}

TEST_CASE("records round-trip losslessly through the line format") {
  std::vector<ResultRecord> records;
  CampaignConfig c;
  c.theorem = TheoremId::subadditivity;
  c.shape = SubsystemShape({2, 2});
  c.samples = 8;
  c.seed = 11;
  run_campaign(c, &records);
  for (const auto& r : records) {
    const std::string line = r.to_json_line();
    const ResultRecord back = ResultRecord::from_json_line(line);
    CHECK(back.to_json_line() == line);
  }
}

TEST_CASE("record parsing rejects malformed lines") {
  CHECK_THROWS_AS(ResultRecord::from_json_line("not json"), Error);
  CHECK_THROWS_AS(ResultRecord::from_json_line("{\"theorem\":\"gibbs\"}"), Error);
  CHECK_THROWS_AS(ResultRecord::from_json_line("[1,2,3]"), Error);
}

TEST_CASE("config hash tracks verdict-relevant fields only") {
  const CampaignConfig base = small_gibbs(10, 5);
  CampaignConfig other = base;
  other.output_path = "/tmp/elsewhere.jsonl";
  CHECK(config_hash(base) == config_hash(other));
  other = base;
  other.seed = 6;
  CHECK(config_hash(base) != config_hash(other));
  other = base;
  other.options.mode = TraceMode::literal;
  CHECK(config_hash(base) != config_hash(other));
}

TEST_CASE("invalid configurations are rejected") {
  CampaignConfig c = small_gibbs(10, 1);
  c.samples = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);

  c = small_gibbs(10, 1);
  c.shape = SubsystemShape({128});
  CHECK_THROWS_AS(validate(c), ConfigError);

  c = small_gibbs(10, 1);
  c.theorem = TheoremId::ssa;
  c.shape = SubsystemShape({2, 2});
  CHECK_THROWS_AS(validate(c), ConfigError);

  c = small_gibbs(10, 1);
  c.theorem = TheoremId::klein;
  c.options.ensemble = Ensemble::product_state;
  CHECK_THROWS_AS(validate(c), ConfigError);

  c = small_gibbs(10, 1);
  c.options.state_override = Mat::Identity(3, 3);  // wrong dimension
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("state and weight overrides pin the operands") {
  CampaignConfig c = small_gibbs(5, 9);
  Mat rho = Mat::Zero(4, 4);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.3;
  c.options.state_override = rho;
  c.options.weight_override = Mat::Identity(4, 4);
  std::vector<ResultRecord> records;
  run_campaign(c, &records);
  // with phi = 1 the trace condition is automatic and every instance passes
  for (const auto& r : records) {
    CHECK(r.verdict.pass);
    CHECK(!r.verdict.vacuous);
  }
}

TEST_CASE("campaign rejects an unwritable output path") {
  CampaignConfig c = small_gibbs(3, 1);
  c.output_path = "/nonexistent-dir/records.jsonl";
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
}

TEST_CASE("campaign completes even when every instance is degenerate") {
  // A maximally mixed override forces the purification pairing to refuse;
  // all records must still be written, as vacuous verdicts.
  CampaignConfig c;
  c.theorem = TheoremId::purification;
  c.shape = SubsystemShape({4});
  c.samples = 10;
  c.seed = 17;
  c.options.state_override = Mat::Identity(4, 4) / 4.0;
  std::vector<ResultRecord> records;
  const CampaignSummary s = run_campaign(c, &records);
  CHECK(records.size() == 10);
  CHECK(s.vacuous == 10);
  CHECK(s.failed == 0);
}

TEST_CASE("a failing campaign is visible to summarize") {
  TempFile tmp("failures.jsonl");
  CampaignConfig c;
  c.theorem = TheoremId::lieb_triple;
  c.shape = SubsystemShape({3});
  c.samples = 60;  // generic weights: violations appear at this sample size
  c.seed = 19;
  c.output_path = tmp.path;
  const CampaignSummary s = run_campaign(c);
  REQUIRE(s.failed > 0);
  const FileSummary fs = summarize_file(tmp.path);
  CHECK(fs.any_failures());
  CHECK(fs.per_theorem.at("lieb_triple").fail == s.failed);
}

TEST_CASE("summarize reproduces campaign counts and flags failures") {
  TempFile tmp("summary.jsonl");
  CampaignConfig c = small_gibbs(30, 21);
  c.output_path = tmp.path;
  const CampaignSummary s = run_campaign(c);

  FileSummary fs = summarize_file(tmp.path);
  CHECK(fs.records == 30);
  CHECK(fs.headers == 1);
  CHECK(fs.malformed == 0);
  const TheoremSummary& t = fs.per_theorem.at("gibbs");
  CHECK(t.pass == s.passed);
  CHECK(t.fail == s.failed);
  CHECK(t.vacuous == s.vacuous);
  CHECK(!fs.any_failures());
  CHECK(fs.render().find("gibbs") != std::string::npos);
  CHECK(fs.to_json().find("\"records\":30") != std::string::npos);
}

TEST_CASE("summarize handles empty files and malformed lines") {
  TempFile tmp("mixed.jsonl");
  {
    std::ofstream out(tmp.path);
  }
  FileSummary empty = summarize_file(tmp.path);
  CHECK(empty.records == 0);
  CHECK(!empty.any_failures());

  {
    std::ofstream out(tmp.path);
    CampaignConfig c = small_gibbs(3, 2);
    std::vector<ResultRecord> records;
    run_campaign(c, &records);
    out << results_header_line(config_json(c)) << "\n";
    out << records[0].to_json_line() << "\n";
    out << "%%% broken line\n";
    out << records[1].to_json_line() << "\n";
  }
  FileSummary mixed = summarize_file(tmp.path);
  CHECK(mixed.records == 2);
  CHECK(mixed.malformed == 1);
  REQUIRE(mixed.warnings.size() == 1);
  CHECK(mixed.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("matrix file format round-trips and rejects bad payloads") {
  Rng rng = test::rng_for(77);
  const Mat m = sample_ginibre(4, 4, rng);
  const std::string doc = matrix_document(m, {2, 2});
  const MatrixFile back = parse_matrix_document(doc);
  CHECK((back.matrix - m).norm() == 0.0);
  CHECK(back.dims == std::vector<int>{2, 2});

  CHECK_THROWS_AS(parse_matrix_document("{\"re\": [[1]]}"), ConfigError);
  CHECK_THROWS_AS(parse_matrix_document("{\"dims\": [2], \"re\": [[1, 0]]}"), ConfigError);
  CHECK_THROWS_AS(
      parse_matrix_document("{\"dims\": [2], \"re\": [[1, 0], [0, 1], [0, 0]]}"),
      ConfigError);
  CHECK_THROWS_AS(parse_matrix_document(
                      "{\"dims\": [2], \"re\": [[1, 0], [0, 1]], \"im\": [[0]]}"),
                  ConfigError);
  CHECK_THROWS_AS(parse_matrix_document("{\"dims\": [0], \"re\": []}"), ConfigError);

  // im is optional for real matrices
  const MatrixFile real = parse_matrix_document("{\"dims\": [2], \"re\": [[1, 0], [0, 1]]}");
  CHECK((real.matrix - Mat::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("search finds the engineered weighted-KL violation quickly") {
  SearchConfig c;
  c.target = "gibbs-trace-condition";
  c.shape = SubsystemShape({2});
  c.max_trials = 10000;
  c.seed = 4;
  const SearchOutcome o = search_counterexample(c);
  CHECK(o.found);
  CHECK(o.trials < 200);
  CHECK(o.hit->verdict.slack < -1e-9);
  CHECK(o.hit->verdict.vacuous);  // the condition was broken on purpose
  CHECK(!o.genuine_failure);
}

TEST_CASE("search exhausts on condition-satisfying subadditivity") {
  SearchConfig c;
  c.target = "subadditivity-condition-satisfied";
  c.shape = SubsystemShape({2, 2});
  c.max_trials = 300;
  c.seed = 5;
  const SearchOutcome o = search_counterexample(c);
  CHECK(!o.found);
  CHECK(o.trials > 0);
}

TEST_CASE("search finds the generic-weight triple-inequality violation") {
  SearchConfig c;
  c.target = "lieb-triple-weighted";
  c.shape = SubsystemShape({3});
  c.max_trials = 500;
  c.seed = 6;
  const SearchOutcome o = search_counterexample(c);
  CHECK(o.found);
  CHECK(o.genuine_failure);  // no side conditions were broken
  CHECK(o.hit->verdict.slack < -1e-9);
}

TEST_CASE("search rejects unknown targets") {
  SearchConfig c;
  c.target = "no-such-target";
  CHECK_THROWS_AS(search_counterexample(c), ConfigError);
}

TEST_CASE("demo values check out") {
  std::ostringstream os;
  CHECK(run_demo(os) == 0);
  CHECK(os.str().find("MISS") == std::string::npos);
  CHECK(os.str().find("log 2") != std::string::npos);
}

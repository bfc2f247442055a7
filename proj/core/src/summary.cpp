#include "wqe/summary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wqe {

namespace {

double percentile(std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const size_t idx = static_cast<size_t>(q * (sorted.size() - 1));
  return sorted[idx];
}

}  // namespace

bool FileSummary::any_failures() const {
  for (const auto& [name, t] : per_theorem)
    if (t.fail > 0) return true;
  return false;
}

FileSummary summarize_stream(std::istream& in) {
  FileSummary summary;
  std::map<std::string, std::vector<double>> slacks;

  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (is_results_header(line)) {
      ++summary.headers;
      continue;
    }
    ResultRecord r;
    try {
      r = ResultRecord::from_json_line(line);
    } catch (const Error& e) {
      ++summary.malformed;
      std::ostringstream os;
      os << "line " << lineno << ": " << e.what();
      summary.warnings.push_back(os.str());
      continue;
    }
    ++summary.records;
    TheoremSummary& t = summary.per_theorem[theorem_name(r.verdict.theorem)];
    ++t.total;
    if (r.verdict.vacuous)
      ++t.vacuous;
    else if (r.verdict.pass)
      ++t.pass;
    else
      ++t.fail;
    if (std::isinf(r.verdict.slack) && r.verdict.slack > 0) ++t.infinite;
    if (std::isfinite(r.verdict.slack))
      slacks[theorem_name(r.verdict.theorem)].push_back(r.verdict.slack);
    t.max_imag_residue = std::max(t.max_imag_residue, r.verdict.max_imag_residue());
  }

  for (auto& [name, t] : summary.per_theorem) {
    auto& s = slacks[name];
    std::sort(s.begin(), s.end());
    t.min_slack = s.empty() ? 0.0 : s.front();
    t.p1_slack = percentile(s, 0.01);
    t.median_slack = percentile(s, 0.5);
    t.condition_rate =
        t.total == 0 ? 1.0 : 1.0 - static_cast<double>(t.vacuous) / static_cast<double>(t.total);
  }
  return summary;
}

FileSummary summarize_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  return summarize_stream(in);
}

std::string FileSummary::render() const {
  std::ostringstream os;
  os << "records " << records << ", headers " << headers << ", malformed " << malformed
     << "\n";
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  if (per_theorem.empty()) {
    os << "(no records)\n";
    return os.str();
  }
  os << "theorem           pass     fail  vacuous      min slack       p1 slack"
        "   median slack   max |Im| residue  cond.rate\n";
  for (const auto& [name, t] : per_theorem) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "%-15s %6llu %8llu %8llu %14.3e %14.3e %14.3e %18.3e %10.3f\n",
                  name.c_str(), static_cast<unsigned long long>(t.pass),
                  static_cast<unsigned long long>(t.fail),
                  static_cast<unsigned long long>(t.vacuous), t.min_slack, t.p1_slack,
                  t.median_slack, t.max_imag_residue, t.condition_rate);
    os << buf;
    if (t.infinite > 0)
      os << "  (" << t.infinite << " infinite-divergence records counted as pass)\n";
  }
  return os.str();
}

std::string FileSummary::to_json() const {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [name, t] : per_theorem) {
    per[name] = {{"total", t.total},
                 {"pass", t.pass},
                 {"fail", t.fail},
                 {"vacuous", t.vacuous},
                 {"infinite", t.infinite},
                 {"min_slack", t.min_slack},
                 {"p1_slack", t.p1_slack},
                 {"median_slack", t.median_slack},
                 {"max_imag_residue", t.max_imag_residue},
                 {"condition_rate", t.condition_rate}};
  }
  nlohmann::json j{{"records", records},
                   {"headers", headers},
                   {"malformed", malformed},
                   {"theorems", per},
                   {"failures", any_failures()}};
  return j.dump();
}

}  // namespace wqe

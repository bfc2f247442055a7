#include "wqe/records.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wqe/version.hpp"

namespace wqe {

namespace {

using nlohmann::json;

// JSON has no infinities; encode them as string markers so records stay
// parseable and lossless.
json encode_double(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  if (std::isnan(x)) return json("nan");
  return json(x);
}

double decode_double(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw Error("record: bad numeric marker '" + s + "'");
  }
  return j.get<double>();
}

}  // namespace

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()) % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec,
                static_cast<int>(ms.count()));
  return buf;
}

std::string fnv1a_hex(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ResultRecord::to_json_line() const {
  json conditions = json::object();
  for (const auto& c : verdict.conditions)
    conditions[c.name] = {{"value", encode_double(c.value)}, {"ok", c.ok}};
  json residues = json::object();
  for (const auto& [name, value] : verdict.imag_residues) residues[name] = encode_double(value);
  json diagnostics = json::object();
  for (const auto& [name, value] : verdict.diagnostics) diagnostics[name] = encode_double(value);

  json j{{"theorem", theorem_name(verdict.theorem)},
         {"seed", verdict.seed},
         {"index", verdict.stream_index},
         {"mode", trace_mode_name(verdict.mode)},
         {"conditions", conditions},
         {"lhs", encode_double(verdict.lhs)},
         {"rhs", encode_double(verdict.rhs)},
         {"slack", encode_double(verdict.slack)},
         {"imag_residue", encode_double(verdict.max_imag_residue())},
         {"imag_residues", residues},
         {"diagnostics", diagnostics},
         {"equality", verdict.equality},
         {"pass", verdict.pass},
         {"vacuous", verdict.vacuous},
         {"tol", encode_double(verdict.tolerance)},
         {"config_hash", config_hash},
         {"ts", timestamp},
         {"version", version}};
  if (error) j["error"] = *error;
  return j.dump();
}

ResultRecord ResultRecord::from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(std::string("record: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("record: not a JSON object");

  ResultRecord r;
  try {
    const auto id = theorem_from_name(j.at("theorem").get<std::string>());
    if (!id) throw Error("record: unknown theorem name");
    r.verdict.theorem = *id;
    r.verdict.seed = j.at("seed").get<std::uint64_t>();
    r.verdict.stream_index = j.at("index").get<std::uint64_t>();
    r.verdict.mode = trace_mode_from_name(j.at("mode").get<std::string>());
    for (const auto& [name, c] : j.at("conditions").items())
      r.verdict.conditions.push_back(
          {name, decode_double(c.at("value")), c.at("ok").get<bool>()});
    r.verdict.lhs = decode_double(j.at("lhs"));
    r.verdict.rhs = decode_double(j.at("rhs"));
    r.verdict.slack = decode_double(j.at("slack"));
    for (const auto& [name, v] : j.at("imag_residues").items())
      r.verdict.imag_residues.emplace_back(name, decode_double(v));
    for (const auto& [name, v] : j.at("diagnostics").items())
      r.verdict.diagnostics.emplace_back(name, decode_double(v));
    r.verdict.equality = j.at("equality").get<bool>();
    r.verdict.pass = j.at("pass").get<bool>();
    r.verdict.vacuous = j.at("vacuous").get<bool>();
    r.verdict.tolerance = decode_double(j.at("tol"));
    r.config_hash = j.at("config_hash").get<std::string>();
    r.timestamp = j.at("ts").get<std::string>();
    r.version = j.at("version").get<std::string>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(std::string("record: missing or mistyped field: ") + e.what());
  }
  return r;
}

bool ResultRecord::same_verdict(const ResultRecord& other) const {
  ResultRecord a = *this, b = other;
  a.timestamp.clear();
  b.timestamp.clear();
  return a.to_json_line() == b.to_json_line();
}

std::string results_header_line(const std::string& config_json) {
  json j{{"schema", "wqe-results"},
         {"schema_version", 1},
         {"library_version", kVersion},
         {"created", iso8601_now()},
         {"config", json::parse(config_json)}};
  return j.dump();
}

bool is_results_header(const std::string& line) {
  try {
    const json j = json::parse(line);
    return j.is_object() && j.contains("schema") && j["schema"] == "wqe-results";
  } catch (const json::exception&) {
    return false;
  }
}

MatrixFile parse_matrix_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("matrix file: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("re"))
    throw ConfigError("matrix file: need 'dims' and 're' keys");

  MatrixFile out;
  try {
    out.dims = j.at("dims").get<std::vector<int>>();
  } catch (const json::exception&) {
    throw ConfigError("matrix file: 'dims' must be a list of integers");
  }
  if (out.dims.empty()) throw ConfigError("matrix file: 'dims' is empty");
  long long total = 1;
  for (int d : out.dims) {
    if (d < 1) throw ConfigError("matrix file: dims entries must be positive");
    total *= d;
  }

  const auto read_plane = [&](const char* key) -> std::vector<std::vector<double>> {
    try {
      return j.at(key).get<std::vector<std::vector<double>>>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("matrix file: '") + key +
                        "' must be a matrix of numbers");
    }
  };

  const auto re = read_plane("re");
  if (static_cast<long long>(re.size()) != total)
    throw ConfigError("matrix file: 're' row count does not match dims product");
  for (const auto& row : re)
    if (static_cast<long long>(row.size()) != total)
      throw ConfigError("matrix file: 're' is not square");

  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = read_plane("im");
    if (im.size() != re.size()) throw ConfigError("matrix file: 'im' shape mismatch");
    for (const auto& row : im)
      if (row.size() != re.size()) throw ConfigError("matrix file: 'im' is not square");
  }

  out.matrix.resize(total, total);
  for (long long i = 0; i < total; ++i)
    for (long long k = 0; k < total; ++k)
      out.matrix(i, k) = cxd(re[i][k], im.empty() ? 0.0 : im[i][k]);
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("matrix file: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string matrix_document(const Mat& m, const std::vector<int>& dims) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rrow = json::array(), irow = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rrow.push_back(m(i, k).real());
      irow.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"dims", dims}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

void write_matrix_file(const std::string& path, const Mat& m, const std::vector<int>& dims) {
  std::ofstream out(path);
  if (!out) throw ConfigError("matrix file: cannot write " + path);
  out << matrix_document(m, dims) << "\n";
}

}  // namespace wqe

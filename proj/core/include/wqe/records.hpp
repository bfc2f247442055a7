#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wqe/verdict.hpp"

namespace wqe {

// One campaign result: the verdict plus run metadata, serialised as a single
// JSON line. Round-trips losslessly (timestamps included verbatim).
struct ResultRecord {
  Verdict verdict;
  std::string config_hash;
  std::string timestamp;
  std::string version;
  std::optional<std::string> error;  // unexpected checker failure, if any

  std::string to_json_line() const;
  static ResultRecord from_json_line(const std::string& line);

  bool same_verdict(const ResultRecord& other) const;  // ignores the timestamp
};

// Header line that versions the record schema; `config_json` is embedded.
std::string results_header_line(const std::string& config_json);
bool is_results_header(const std::string& line);

std::string iso8601_now();

// FNV-1a over a canonical string.
std::string fnv1a_hex(const std::string& canonical);

// Matrix file format: { "dims": [...], "re": [[...]], "im": [[...]] },
// row-major decimal entries. Readers reject non-square or dims-inconsistent
// payloads. "im" may be omitted for real matrices.
struct MatrixFile {
  Mat matrix;
  std::vector<int> dims;
};
MatrixFile read_matrix_file(const std::string& path);
MatrixFile parse_matrix_document(const std::string& text);
std::string matrix_document(const Mat& m, const std::vector<int>& dims);
void write_matrix_file(const std::string& path, const Mat& m, const std::vector<int>& dims);

}  // namespace wqe

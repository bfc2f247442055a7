#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wqe/entropy.hpp"

namespace wqe {

enum class TheoremId {
  klein,
  gibbs,
  bounds,
  purification,
  diagonalisation,
  subadditivity,
  concavity,
  araki_lieb,
  ssa,
  lieb_triple,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct Condition {
  std::string name;
  double value = 0.0;
  bool ok = false;
};

// One checker evaluation. Orientation: slack = rhs - lhs, so an inequality
// verdict passes when slack >= -tolerance; equality verdicts additionally
// need slack <= tolerance. A verdict whose side conditions fail is vacuous
// and never counts as a failure, but keeps its full numerics so searches can
// look for violations of the unconditioned statement.
struct Verdict {
  TheoremId theorem = TheoremId::gibbs;
  std::vector<Condition> conditions;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::vector<std::pair<std::string, double>> imag_residues;
  std::vector<std::pair<std::string, double>> diagnostics;
  bool equality = false;
  bool auxiliary_ok = true;  // extra sub-assertions folded in by the checker
  bool pass = true;
  bool vacuous = false;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
  TraceMode mode = TraceMode::literal;

  void add_condition(std::string name, double value, bool ok);
  void add_residue(std::string name, double value);
  void add_diagnostic(std::string name, double value);
  double max_imag_residue() const;

  // Computes vacuous/pass from the recorded conditions and slack.
  void finalize(double tol);
};

}  // namespace wqe

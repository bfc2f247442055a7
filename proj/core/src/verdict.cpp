#include "wqe/verdict.hpp"

#include <algorithm>
#include <cmath>

namespace wqe {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::klein: return "klein";
    case TheoremId::gibbs: return "gibbs";
    case TheoremId::bounds: return "bounds";
    case TheoremId::purification: return "purification";
    case TheoremId::diagonalisation: return "diagonalisation";
    case TheoremId::subadditivity: return "subadditivity";
    case TheoremId::concavity: return "concavity";
    case TheoremId::araki_lieb: return "araki_lieb";
    case TheoremId::ssa: return "ssa";
    case TheoremId::lieb_triple: return "lieb_triple";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  static const std::pair<const char*, TheoremId> table[] = {
      {"klein", TheoremId::klein},
      {"gibbs", TheoremId::gibbs},
      {"bounds", TheoremId::bounds},
      {"purification", TheoremId::purification},
      {"diagonalisation", TheoremId::diagonalisation},
      {"subadditivity", TheoremId::subadditivity},
      {"concavity", TheoremId::concavity},
      {"araki_lieb", TheoremId::araki_lieb},
      {"araki-lieb", TheoremId::araki_lieb},
      {"ssa", TheoremId::ssa},
      {"lieb_triple", TheoremId::lieb_triple},
      {"lieb-triple", TheoremId::lieb_triple},
  };
  for (const auto& [n, id] : table)
    if (name == n) return id;
  return std::nullopt;
}

void Verdict::add_condition(std::string name, double value, bool ok) {
  conditions.push_back({std::move(name), value, ok});
}

void Verdict::add_residue(std::string name, double value) {
  imag_residues.emplace_back(std::move(name), value);
}

void Verdict::add_diagnostic(std::string name, double value) {
  diagnostics.emplace_back(std::move(name), value);
}

double Verdict::max_imag_residue() const {
  double m = 0.0;
  for (const auto& [name, v] : imag_residues) m = std::max(m, v);
  return m;
}

void Verdict::finalize(double tol) {
  tolerance = tol;
  vacuous = std::any_of(conditions.begin(), conditions.end(),
                        [](const Condition& c) { return !c.ok; });
  if (vacuous) {
    pass = true;  // conditions not met: the statement is not in force
    return;
  }
  const bool slack_ok = equality ? std::abs(slack) <= tol : slack >= -tol;
  pass = slack_ok && auxiliary_ok;
}

}  // namespace wqe

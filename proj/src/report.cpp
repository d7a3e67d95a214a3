#include "modnorm/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace modnorm {

void OrthogonalityReport::set(const std::string& label, bool verdict, double residual) {
  for (auto& [name, result] : statements) {
    if (name == label) {
      result = {verdict, residual};
      return;
    }
  }
  statements.emplace_back(label, StatementResult{verdict, residual});
}

bool OrthogonalityReport::has(const std::string& label) const {
  return std::any_of(statements.begin(), statements.end(),
                     [&](const auto& entry) { return entry.first == label; });
}

const StatementResult& OrthogonalityReport::at(const std::string& label) const {
  for (const auto& [name, result] : statements) {
    if (name == label) return result;
  }
  throw std::out_of_range("report has no statement '" + label + "'");
}

void OrthogonalityReport::add_witness(const std::string& label, Witness w) {
  witnesses.emplace_back(label, std::move(w));
}

void OrthogonalityReport::require_agree(std::initializer_list<std::string> labels,
                                        const std::string& rule) {
  bool first = true;
  bool value = false;
  for (const auto& label : labels) {
    const bool v = verdict(label);
    if (first) {
      value = v;
      first = false;
    } else if (v != value) {
      violations.push_back(rule);
      return;
    }
  }
}

void OrthogonalityReport::require_implies(const std::string& premise, const std::string& conclusion) {
  if (verdict(premise) && !verdict(conclusion)) violations.push_back(premise + " => " + conclusion);
}

void OrthogonalityReport::require(bool condition, const std::string& rule) {
  if (!condition) violations.push_back(rule);
}

void OrthogonalityReport::finalize() { consistent = violations.empty(); }

}  // namespace modnorm

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modnorm/linalg.hpp"
#include "modnorm/states.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

struct StatementResult {
  bool verdict = false;
  double residual = 0.0;  // relative defect of the tested relation; 0 = exact
};

using Witness = std::variant<DensityState, ComplexVector>;

/// Verdicts, residuals and witnesses for one analyzed pair. Statements keep
/// insertion order so serialized reports are stable.
struct OrthogonalityReport {
  std::string pair_id;
  std::vector<std::pair<std::string, StatementResult>> statements;
  std::vector<std::pair<std::string, Witness>> witnesses;
  std::vector<std::string> violations;
  bool consistent = true;
  ToleranceConfig tolerances_used;

  void set(const std::string& label, bool verdict, double residual = 0.0);
  bool has(const std::string& label) const;
  const StatementResult& at(const std::string& label) const;  // throws std::out_of_range
  bool verdict(const std::string& label) const { return at(label).verdict; }

  void add_witness(const std::string& label, Witness w);

  // Records a violation unless all listed statements share one verdict.
  void require_agree(std::initializer_list<std::string> labels, const std::string& rule);
  void require_implies(const std::string& premise, const std::string& conclusion);
  void require(bool condition, const std::string& rule);

  // Sets `consistent` from the violation list.
  void finalize();
};

}  // namespace modnorm

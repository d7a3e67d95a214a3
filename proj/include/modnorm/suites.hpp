#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modnorm/matrix_io.hpp"
#include "modnorm/report.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

struct SuiteFailure {
  std::string pair_id;
  std::string label;
  double residual = 0.0;
};

/// Outcome of a randomized theorem suite. `failures` is empty iff every case
/// is consistent.
struct SuiteReport {
  std::string suite_name;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<OrthogonalityReport> cases;
  std::vector<SuiteFailure> failures;
  long long elapsed_ms = 0;  // only measured when timing is requested
};

const std::vector<std::string>& suite_names();

// Runs `count` cases of the named suite ("all" runs every suite). Case i uses
// the seed splitmix64(seed, i); cases run concurrently and are reduced in
// index order, so the report is deterministic. Throws InputError for an
// unknown name or a negative count.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count, const ToleranceConfig& cfg,
                      bool timing = false);

Json suite_to_json(const SuiteReport& r);

}  // namespace modnorm

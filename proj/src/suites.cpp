#include "modnorm/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iterator>
#include <thread>
#include <utility>

#include "modnorm/errors.hpp"
#include "suite_detail.hpp"

namespace modnorm {
namespace {

using detail::CaseFn;

const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> r = {
      {"thraj", detail::thraj_case}, {"c5", detail::c5_case},     {"e1", detail::e1_case},
      {"e2", detail::e2_case},       {"e3", detail::e3_case},     {"e4", detail::e4_case},
      {"t6", detail::t6_case},       {"t10", detail::t10_case},   {"t16", detail::t16_case},
      {"l15", detail::l15_case},     {"properties", detail::properties_case},
  };
  return r;
}

OrthogonalityReport run_case(const std::string& name, CaseFn fn, std::uint64_t seed, int index,
                             const ToleranceConfig& cfg) {
  OrthogonalityReport rep;
  rep.pair_id = name + "#" + std::to_string(index);
  rep.tolerances_used = cfg;
  const std::uint64_t case_seed = splitmix64(seed, static_cast<std::uint64_t>(index));
  Rng rng(case_seed);
  try {
    fn(detail::CaseInput{case_seed, index, cfg}, rng, rep);
  } catch (const std::exception& e) {
    detail::check(rep, std::string("unexpected exception: ") + e.what(), false);
  }
  rep.finalize();
  return rep;
}

std::vector<OrthogonalityReport> run_cases(const std::string& name, CaseFn fn, std::uint64_t seed, int count,
                                           const ToleranceConfig& cfg) {
  std::vector<OrthogonalityReport> out(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) out[static_cast<std::size_t>(i)] = run_case(name, fn, seed, i, cfg);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int n_threads = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(std::max(count, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void collect_failures(SuiteReport& r) {
  for (const auto& c : r.cases) {
    for (const auto& [label, st] : c.statements) {
      if (!st.verdict) r.failures.push_back({c.pair_id, label, st.residual});
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [n, fn] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count, const ToleranceConfig& cfg,
                      bool timing) {
  if (count < 0) throw InputError("suite count must be non-negative");
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite_name = name;
  r.seed = seed;
  r.count = count;
  bool found = false;
  for (const auto& [n, fn] : registry()) {
    if (name != "all" && name != n) continue;
    found = true;
    auto cases = run_cases(n, fn, seed, count, cfg);
    std::move(cases.begin(), cases.end(), std::back_inserter(r.cases));
  }
  if (!found) throw InputError("unknown suite '" + name + "'");
  collect_failures(r);
  if (timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  }
  return r;
}

Json suite_to_json(const SuiteReport& r) {
  Json j;
  j["suite_name"] = r.suite_name;
  j["seed"] = r.seed;
  j["count"] = r.count;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(report_to_json(c));
  j["cases"] = std::move(cases);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"pair_id", f.pair_id}, {"label", f.label}, {"residual", f.residual}});
  }
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace modnorm

// modnorm: analyze matrix pairs, sample numerical ranges and run theorem suites.
//
// Exit codes: 0 primary verdict true (or suite clean), 1 false (or suite
// failures), 2 hypothesis violation, 3 input error, 4 internal error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "modnorm/closed_forms.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/matrix_io.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/numerical_range.hpp"
#include "modnorm/orthogonality.hpp"
#include "modnorm/suites.hpp"

namespace {

using namespace modnorm;

struct Common {
  std::string out;
  double eps_eq = kDefaultEpsEq;
  double eps_opt = kDefaultEpsOpt;
  std::uint64_t seed = 42;
  int lattice_mags = 8;
  int lattice_phases = 24;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MODNORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("MODNORM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 42;
}

void add_common(CLI::App* cmd, Common& c, bool tolerances) {
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  cmd->add_option("--seed", c.seed, "RNG seed (default: MODNORM_SEED or 42)");
  if (!tolerances) return;
  cmd->add_option("--eps-eq", c.eps_eq, "Equality tolerance");
  cmd->add_option("--eps-opt", c.eps_opt, "Optimization tolerance");
  cmd->add_option("--lattice-mags", c.lattice_mags, "Lattice magnitudes 2^k, |k| <= K");
  cmd->add_option("--lattice-phases", c.lattice_phases, "Lattice phases per magnitude");
}

ToleranceConfig make_config(const Common& c) {
  ToleranceConfig cfg;
  cfg.eps_eq = c.eps_eq;
  cfg.eps_opt = c.eps_opt;
  cfg.rng_seed = c.seed;
  if (c.lattice_mags < 0) throw InputError("--lattice-mags must be non-negative");
  if (c.lattice_phases < 1) throw InputError("--lattice-phases must be positive");
  cfg.lattice_magnitude_exponent = c.lattice_mags;
  cfg.lattice_phases = c.lattice_phases;
  cfg.rebuild_lattice();
  cfg.validate();
  return cfg;
}

void emit(const Common& c, const Json& j) {
  if (c.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(c.out, j);
  }
}

OrthogonalityReport lattice_report(const std::string& label, const LatticeCheck& lc, const ToleranceConfig& cfg) {
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  rep.set(label, lc.holds, lc.residual);
  rep.finalize();
  return rep;
}

// Returns the primary verdict.
bool run_check(const std::string& kind, const std::string& x_path, const std::string& y_path, const Common& c) {
  const ToleranceConfig cfg = make_config(c);
  const ComplexMatrix x = parse_matrix_file(x_path);
  if (kind == "numrange") {
    emit(c, range_boundary_to_json(range_boundary(x, cfg)));
    return true;
  }
  if (y_path.empty()) throw InputError("check " + kind + " needs two matrix files");
  const ComplexMatrix y = parse_matrix_file(y_path);
  if (kind == "min-lambda") {
    emit(c, min_lambda_to_json(min_lambda_norm(x, y, cfg)));
    return true;
  }

  static const std::map<std::string, std::string> primary = {
      {"triangle", "i_norm_sum"},        {"c5", "i_sum_norm"},
      {"c6", "i_sum_square"},            {"parallelogram3", "i_parallelogram"},
      {"pythagoras-identity", "i_pythagoras"}, {"c36", "i_pythagoras"},
      {"roberts", "roberts"},            {"parallelogram", "parallelogram"},
      {"pythagoras", "D_definition"},    {"bj", "bj"},
  };
  const auto it = primary.find(kind);
  if (it == primary.end()) throw InputError("unknown check kind '" + kind + "'");

  OrthogonalityReport rep;
  if (kind == "triangle") {
    rep = triangle_equality(x, y, cfg);
  } else if (kind == "c5") {
    rep = c5_report(x, y, cfg);
  } else if (kind == "c6") {
    const auto [i, ii] = c6_check(x, y, cfg);
    rep.tolerances_used = cfg;
    rep.set("i_sum_square", i);
    rep.set("ii_product", ii);
    rep.require_agree({"i_sum_square", "ii_product"}, "c6 agreement");
    rep.finalize();
  } else if (kind == "parallelogram3") {
    rep = parallelogram_two_imply_third(x, y, cfg);
  } else if (kind == "pythagoras-identity") {
    rep = pythagoras_identity(x, y, cfg);
  } else if (kind == "c36") {
    rep = c36_check(x, y, cfg);
  } else if (kind == "roberts") {
    rep = lattice_report("roberts", roberts_lattice(x, y, cfg), cfg);
  } else if (kind == "parallelogram") {
    rep = lattice_report("parallelogram", parallelogram_lattice(x, y, cfg), cfg);
  } else if (kind == "pythagoras") {
    rep = pythagoras_orthogonal(x, y, cfg);
  } else {
    const BjResult bj = bj_orthogonal(x, y, cfg);
    rep.tolerances_used = cfg;
    rep.set("bj", bj.orthogonal);
    if (bj.witness) rep.add_witness("bj", *bj.witness);
    rep.finalize();
  }
  rep.pair_id = x_path + "," + y_path;
  emit(c, report_to_json(rep));
  return rep.verdict(it->second);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonality deciders for matrix pairs"};
  app.require_subcommand(1);

  Common check_opts, suite_opts, range_opts, minl_opts;
  std::string kind, x_path, y_path, a_path, b_path, suite_name;
  int count = 50, angles = 0;
  bool timing = false;

  auto* check = app.add_subcommand("check", "Decide one statement family for a pair");
  check->add_option("kind", kind, "Statement family")->required();
  check->add_option("x", x_path, "First matrix file")->required();
  check->add_option("y", y_path, "Second matrix file");
  add_common(check, check_opts, true);

  auto* suite = app.add_subcommand("suite", "Run a randomized theorem suite");
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--count", count, "Cases per suite");
  suite->add_flag("--timing", timing, "Record elapsed_ms (otherwise 0, for byte-stable reports)");
  add_common(suite, suite_opts, true);

  auto* numrange = app.add_subcommand("numrange", "Sample the numerical range boundary");
  numrange->add_option("a", a_path, "Matrix file")->required();
  numrange->add_option("--angles", angles, "Number of boundary angles");
  add_common(numrange, range_opts, false);

  auto* minl = app.add_subcommand("min-lambda", "Minimize ||A + lambda B|| over complex lambda");
  minl->add_option("a", a_path, "Matrix file A")->required();
  minl->add_option("b", b_path, "Matrix file B")->required();
  add_common(minl, minl_opts, true);

  try {
    const std::uint64_t seed = default_seed();
    for (Common* c : {&check_opts, &suite_opts, &range_opts, &minl_opts}) c->seed = seed;
    app.parse(argc, argv);

    if (*check) return run_check(kind, x_path, y_path, check_opts) ? 0 : 1;
    if (*suite) {
      const SuiteReport r = run_suite(suite_name, suite_opts.seed, count, make_config(suite_opts), timing);
      emit(suite_opts, suite_to_json(r));
      return r.failures.empty() ? 0 : 1;
    }
    if (*numrange) {
      ToleranceConfig cfg = make_config(range_opts);
      if (angles != 0) {
        if (angles < 3) throw InputError("--angles must be at least 3");
        cfg.phase_grid = angles;
      }
      emit(range_opts, range_boundary_to_json(range_boundary(parse_matrix_file(a_path), cfg)));
      return 0;
    }
    const ToleranceConfig cfg = make_config(minl_opts);
    emit(minl_opts, min_lambda_to_json(min_lambda_norm(parse_matrix_file(a_path), parse_matrix_file(b_path), cfg)));
    return 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}

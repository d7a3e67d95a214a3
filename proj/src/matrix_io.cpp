#include "modnorm/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "modnorm/errors.hpp"

namespace modnorm {
namespace {

double finite_number(const Json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(where + ": non-finite value");
  return d;
}

Eigen::Index positive_dim(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("matrix: missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw InputError(std::string("matrix: field '") + key + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("matrix: top level must be an object");
  const Eigen::Index rows = positive_dim(j, "rows");
  const Eigen::Index cols = positive_dim(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) throw InputError("matrix: field 'data' must be an array");
  const Json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) {
    throw InputError("matrix: 'data' has " + std::to_string(data.size()) + " rows, expected " +
                     std::to_string(rows));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = data.at(i);
    const std::string rw = "matrix: data[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError(rw + " must be an array of " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& e = row.at(k);
      const std::string where = rw + "[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2) throw InputError(where + " must be a [re, im] pair");
      m(i, k) = Complex(finite_number(e.at(0), where + "[0]"), finite_number(e.at(1), where + "[1]"));
    }
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  } catch (const nlohmann::json::out_of_range& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  write_json_file(path, matrix_to_json(m));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json tolerance_to_json(const ToleranceConfig& cfg) {
  Json j;
  j["eps_eq"] = cfg.eps_eq;
  j["eps_opt"] = cfg.eps_opt;
  j["eps_rank"] = cfg.eps_rank;
  j["lattice_magnitude_exponent"] = cfg.lattice_magnitude_exponent;
  j["lattice_phases"] = cfg.lattice_phases;
  j["lattice_random_points"] = cfg.lattice_random_points;
  j["lattice_size"] = cfg.lambda_lattice.size();
  j["phase_grid"] = cfg.phase_grid;
  j["rng_seed"] = cfg.rng_seed;
  return j;
}

Json report_to_json(const OrthogonalityReport& rep) {
  Json j;
  j["pair_id"] = rep.pair_id;
  Json st = Json::object();
  for (const auto& [label, r] : rep.statements) st[label] = {{"verdict", r.verdict}, {"residual", r.residual}};
  j["statements"] = std::move(st);
  Json ws = Json::array();
  for (const auto& [label, w] : rep.witnesses) {
    Json e;
    e["label"] = label;
    if (const auto* phi = std::get_if<DensityState>(&w)) {
      e["kind"] = "density_state";
      e["value"] = matrix_to_json(phi->rho());
    } else {
      e["kind"] = "unit_vector";
      e["value"] = matrix_to_json(std::get<ComplexVector>(w));
    }
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["violations"] = rep.violations;
  j["consistent"] = rep.consistent;
  j["tolerances_used"] = tolerance_to_json(rep.tolerances_used);
  return j;
}

Json min_lambda_to_json(const MinLambdaResult& r) {
  Json j;
  j["lambda_star"] = complex_to_json(r.lambda_star);
  j["value"] = r.value;
  j["iterations"] = r.iterations;
  j["certified_convex"] = r.certified_convex;
  return j;
}

Json range_boundary_to_json(const RangeBoundary& r) {
  Json j;
  j["angles"] = r.angles;
  j["support_values"] = r.support_values;
  Json pts = Json::array();
  for (const Complex z : r.extreme_points) pts.push_back(complex_to_json(z));
  j["extreme_points"] = std::move(pts);
  return j;
}

}  // namespace modnorm

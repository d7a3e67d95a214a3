#pragma once

#include <string>

#include <json.hpp>

#include "modnorm/linalg.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/numerical_range.hpp"
#include "modnorm/report.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

using Json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}. Throws InputError
// naming the offending field on malformed, non-finite or mis-shaped input.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

ComplexMatrix parse_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

Json complex_to_json(Complex z);
Json tolerance_to_json(const ToleranceConfig& cfg);
Json report_to_json(const OrthogonalityReport& rep);
Json min_lambda_to_json(const MinLambdaResult& r);
Json range_boundary_to_json(const RangeBoundary& r);

// Two-space indented dump plus trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace modnorm

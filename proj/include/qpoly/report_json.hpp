#pragma once

#include <string_view>

#include <json.hpp>

#include "qpoly/matrix.hpp"
#include "qpoly/ode.hpp"
#include "qpoly/polynomial.hpp"
#include "qpoly/rootfinder.hpp"

namespace qpoly {

using nlohmann::json;

/// {"roots": [{"q", "lambda": [re, im], "residual", "kind"}], "spheres": [...],
///  "method", "diagnostics": {...}}
json report_to_json(const SolveReport& report);

/// {"degree": n, "coeffs_subtracted": ["<quat>", ...]} with a_0 first.
json polynomial_to_json(const UnilateralPolynomial& poly);
UnilateralPolynomial polynomial_from_json(const json& j);
UnilateralPolynomial polynomial_from_json_text(std::string_view text);

/// {"alpha1": "...", "beta1": "...", "alpha0": "..."}
json bilateral_to_json(const BilateralQuadratic& bq);
BilateralQuadratic bilateral_from_json(const json& j);

/// Rows of [re, im] pairs.
json complex_matrix_to_json(const ComplexMatrix& m);
/// Rows of quaternion literals.
json quaternion_matrix_to_json(const QuaternionMatrix& m);

json basis_to_json(const ExponentialBasis& basis);

}  // namespace qpoly

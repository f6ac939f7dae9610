#pragma once

#include <string>
#include <string_view>

#include "qpoly/polynomial.hpp"

namespace qpoly {

/// Parses `q^n + c_{n-1} q^(n-1) + ... + c_0` (coefficients on the left,
/// written as quaternion literals, optionally parenthesized) or the JSON form
/// {"degree": n, "coeffs_subtracted": [...]}. The human form is negated into
/// the subtracted convention. Throws ParseError.
UnilateralPolynomial parse_polynomial(std::string_view text);

/// Human form, e.g. `q^2 + j q + (1-k)`; parse_polynomial inverts it.
std::string format_polynomial(const UnilateralPolynomial& poly, int precision = 17);

}  // namespace qpoly

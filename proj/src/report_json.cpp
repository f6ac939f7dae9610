#include "qpoly/report_json.hpp"

namespace qpoly {

namespace {

json root_to_json(const Root& r) {
  return {{"q", to_string(r.q)},
          {"lambda", {r.lambda.real(), r.lambda.imag()}},
          {"residual", r.residual},
          {"kind", to_string(r.kind)}};
}

json spheres_to_json(const std::vector<Sphere>& spheres) {
  json out = json::array();
  for (const auto& s : spheres)
    out.push_back({{"re", s.re}, {"imag_norm", s.imag_norm}});
  return out;
}

Quaternion quaternion_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ParseError(std::string("missing string field '") + key + "'", 0);
  return parse_quaternion(j.at(key).get<std::string>());
}

}  // namespace

json report_to_json(const SolveReport& report) {
  json roots = json::array();
  for (const auto& r : report.roots)
    roots.push_back(root_to_json(r));
  json eigen = json::array();
  for (const auto& e : report.diagnostics.eigen)
    eigen.push_back({{"lambda", {e.lambda.real(), e.lambda.imag()}}, {"residual", e.residual}});
  return {{"roots", std::move(roots)},
          {"spheres", spheres_to_json(report.spheres)},
          {"method", to_string(report.method)},
          {"diagnostics", {{"eigen", std::move(eigen)}, {"warnings", report.diagnostics.warnings}}}};
}

json polynomial_to_json(const UnilateralPolynomial& poly) {
  json coeffs = json::array();
  for (const auto& a : poly.coeffs())
    coeffs.push_back(to_string(a));
  return {{"degree", poly.degree()}, {"coeffs_subtracted", std::move(coeffs)}};
}

UnilateralPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs_subtracted") || !j.at("coeffs_subtracted").is_array())
    throw ParseError("expected {\"degree\": n, \"coeffs_subtracted\": [...]}", 0);
  std::vector<Quaternion> coeffs;
  for (const auto& c : j.at("coeffs_subtracted")) {
    if (!c.is_string())
      throw ParseError("coefficients must be quaternion strings", 0);
    coeffs.push_back(parse_quaternion(c.get<std::string>()));
  }
  if (coeffs.empty())
    throw ParseError("polynomial needs at least one coefficient", 0);
  if (j.contains("degree") && j.at("degree") != coeffs.size())
    throw ParseError("degree does not match the number of coefficients", 0);
  return UnilateralPolynomial{std::move(coeffs)};
}

UnilateralPolynomial polynomial_from_json_text(std::string_view text) {
  try {
    return polynomial_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

json bilateral_to_json(const BilateralQuadratic& bq) {
  return {{"alpha1", to_string(bq.alpha1)},
          {"beta1", to_string(bq.beta1)},
          {"alpha0", to_string(bq.alpha0)}};
}

BilateralQuadratic bilateral_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("expected a JSON object with alpha1, beta1, alpha0", 0);
  return {quaternion_field(j, "alpha1"), quaternion_field(j, "beta1"),
          quaternion_field(j, "alpha0")};
}

json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json quaternion_matrix_to_json(const QuaternionMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json basis_to_json(const ExponentialBasis& basis) {
  json exps = json::array();
  for (const auto& r : basis.exponents)
    exps.push_back(root_to_json(r));
  return {{"exponents", std::move(exps)}, {"spheres", spheres_to_json(basis.spheres)}};
}

}  // namespace qpoly

#include "qpoly/polynomial.hpp"

#include <algorithm>

namespace qpoly {

UnilateralPolynomial::UnilateralPolynomial(std::vector<Quaternion> subtracted)
    : coeffs_{std::move(subtracted)} {
  if (coeffs_.empty())
    throw DomainError("polynomial degree must be at least 1");
}

UnilateralPolynomial UnilateralPolynomial::from_human(std::span<const Quaternion> human) {
  std::vector<Quaternion> a;
  a.reserve(human.size());
  for (const auto& c : human)
    a.push_back(-c);
  return UnilateralPolynomial{std::move(a)};
}

double UnilateralPolynomial::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& a : coeffs_)
    m = std::max(m, norm(a));
  return m;
}

double BilateralQuadratic::max_coeff_norm() const {
  return std::max({norm(alpha1), norm(beta1), norm(alpha0)});
}

Quaternion evaluate(const UnilateralPolynomial& poly, const Quaternion& q) {
  Quaternion power{1.0};
  Quaternion sum;
  for (const auto& a : poly.coeffs()) {
    sum += a * power;
    power = power * q;
  }
  return power - sum;
}

Quaternion evaluate_bilateral(const BilateralQuadratic& bq, const Quaternion& p) {
  return p * p - bq.alpha1 * p + p * bq.beta1 - bq.alpha0;
}

ReducedBilateral bilateral_to_unilateral(const BilateralQuadratic& bq) {
  UnilateralPolynomial poly{{bq.alpha0 - bq.alpha1 * bq.beta1, bq.alpha1 + bq.beta1}};
  return {std::move(poly), bq.beta1};
}

}  // namespace qpoly

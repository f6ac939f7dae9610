#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpoly/quaternion.hpp"

namespace qpoly {

/// Monic unilateral polynomial A(q) = q^n - sum_{s<n} a_s q^s.
///
/// Coefficients are stored in this subtracted convention: the human form
/// q^2 + j q + (1-k) has a_1 = -j and a_0 = k-1.
class UnilateralPolynomial {
public:
  /// `subtracted` holds a_0 ... a_{n-1}; its size is the degree (>= 1).
  explicit UnilateralPolynomial(std::vector<Quaternion> subtracted);

  /// Builds from human-convention coefficients c_0 ... c_{n-1} of
  /// q^n + sum c_s q^s, i.e. a_s = -c_s.
  static UnilateralPolynomial from_human(std::span<const Quaternion> human);

  std::size_t degree() const { return coeffs_.size(); }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  const Quaternion& operator[](std::size_t s) const { return coeffs_[s]; }

  /// max_s |a_s|
  double max_coeff_norm() const;

  bool operator==(const UnilateralPolynomial&) const = default;

private:
  std::vector<Quaternion> coeffs_;
};

/// p^2 - alpha1 p + p beta1 - alpha0.
struct BilateralQuadratic {
  Quaternion alpha1;
  Quaternion beta1;
  Quaternion alpha0;

  double max_coeff_norm() const;
};

Quaternion evaluate(const UnilateralPolynomial& poly, const Quaternion& q);

Quaternion evaluate_bilateral(const BilateralQuadratic& bq, const Quaternion& p);

struct ReducedBilateral {
  UnilateralPolynomial poly;
  Quaternion shift;  // p = q - shift
};

/// Substitution p = q - beta1 gives q^2 - (alpha1 + beta1) q - (alpha0 - alpha1 beta1).
ReducedBilateral bilateral_to_unilateral(const BilateralQuadratic& bq);

}  // namespace qpoly

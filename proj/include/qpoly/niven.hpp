#pragma once

#include <vector>

#include "qpoly/polynomial.hpp"
#include "qpoly/rootfinder.hpp"

namespace qpoly {

/// A(q) = B(q) C(q) - D(q) with C(q) = q^2 - c1 q - c0 real,
/// B(q) = q^{n-2} - sum b_s q^s and D(q) = d1 q + d0.
struct NivenFactors {
  double c0 = 0.0;
  double c1 = 0.0;
  std::vector<Quaternion> b;  // b_0 ... b_{n-3}
  Quaternion d0;
  Quaternion d1;
};

/// Raised when d1 = 0: D vanishes on the whole zero set of C, so every q with
/// Re q = c1/2 and |q|^2 = -c0 is a root.
class SphericalRootSignal : public DomainError {
public:
  using DomainError::DomainError;
};

/// Downward recurrence for b, then d1 = a1 + c1 b0 + c0 b1, d0 = a0 + c0 b0.
NivenFactors step1(const UnilateralPolynomial& poly, double c0, double c1);

/// Evaluates B(q) C(q) - D(q); equals A(q) for every q.
Quaternion evaluate_factorization(const NivenFactors& f, const Quaternion& q);

/// q = -conj(d1) d0 / |d1|^2. Throws SphericalRootSignal if |d1| <= d1_floor.
Quaternion root_from_d(const Quaternion& d0, const Quaternion& d1, double d1_floor = 0.0);

struct Step2Residual {
  double r1 = 0.0;  // c0 |d1|^2 + |d0|^2
  double r2 = 0.0;  // c1 |d1|^2 + 2 Re(conj(d1) d0)
};

Step2Residual step2_residual(const UnilateralPolynomial& poly, double c0, double c1);

/// Scans c1 in [-2B, 2B], c0 in [-B^2, 0] (B = 1 + max |a_s|) on a 400x400
/// grid, refines sign-change cells by damped Newton and maps each (c0, c1)
/// through step1 and root_from_d.
SolveReport solve_niven(const UnilateralPolynomial& poly, double tol = kDefaultTol);

/// (c0, c1) = (-|lambda|^2, 2 Re lambda) for each companion eigenvalue class,
/// then step1 and root_from_d.
SolveReport solve_spv(const UnilateralPolynomial& poly, double tol = kDefaultTol);

}  // namespace qpoly

#pragma once

#include <span>
#include <vector>

#include "qpoly/polynomial.hpp"
#include "qpoly/rootfinder.hpp"

namespace qpoly {

/// Psi^(n) - sum_{s<n} a_s Psi^(s) = 0 with constant quaternionic a_s acting
/// from the left. Coefficients use the same subtracted convention as
/// UnilateralPolynomial.
struct OdeProblem {
  std::vector<Quaternion> coeffs;  // a_0 ... a_{n-1}

  std::size_t order() const { return coeffs.size(); }
};

/// Exponents q of solutions exp(q x) c (constant c on the right).
struct ExponentialBasis {
  std::vector<Root> exponents;   // isolated exponents plus one per sphere
  std::vector<Sphere> spheres;
};

UnilateralPolynomial characteristic(const OdeProblem& prob);

ExponentialBasis solve_ode(const OdeProblem& prob, double tol = kDefaultTol);

/// Max over xs of |Psi^(n) - sum a_s Psi^(s)| for Psi(x) = exp(q x) c, with
/// derivatives from central differences of step h (second-order accurate).
double verify_solution(const OdeProblem& prob, const Quaternion& q, std::span<const double> xs,
                       double h, const Quaternion& right_constant = Quaternion{1.0});

/// `steps + 1` equally spaced points on [x0, x1].
std::vector<double> linspace(double x0, double x1, std::size_t steps);

}  // namespace qpoly

#include "qpoly/ode.hpp"

#include <algorithm>
#include <cmath>

namespace qpoly {

UnilateralPolynomial characteristic(const OdeProblem& prob) {
  if (prob.coeffs.empty())
    throw DomainError("ODE order must be at least 1");
  return UnilateralPolynomial{prob.coeffs};
}

ExponentialBasis solve_ode(const OdeProblem& prob, double tol) {
  auto report = solve_unilateral(characteristic(prob), tol);
  return {std::move(report.roots), std::move(report.spheres)};
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

// f^(s)(x) ~ h^-s sum_i (-1)^i C(s,i) f(x + (s/2 - i) h)
template <typename F>
Quaternion central_derivative(F&& f, std::size_t order, double x, double h) {
  if (order == 0)
    return f(x);
  Quaternion acc;
  for (std::size_t i = 0; i <= order; ++i) {
    const double offset = (0.5 * static_cast<double>(order) - static_cast<double>(i)) * h;
    const double weight = (i % 2 == 0 ? 1.0 : -1.0) * binomial(order, i);
    acc += weight * f(x + offset);
  }
  return acc / std::pow(h, static_cast<double>(order));
}

}  // namespace

double verify_solution(const OdeProblem& prob, const Quaternion& q, std::span<const double> xs,
                       double h, const Quaternion& right_constant) {
  if (!(h > 0.0))
    throw DomainError("finite-difference step must be positive");
  const std::size_t n = prob.order();
  auto psi = [&](double x) { return exp(q * x) * right_constant; };
  double worst = 0.0;
  for (const double x : xs) {
    Quaternion r = central_derivative(psi, n, x, h);
    for (std::size_t s = 0; s < n; ++s)
      r -= prob.coeffs[s] * central_derivative(psi, s, x, h);
    worst = std::max(worst, norm(r));
  }
  return worst;
}

std::vector<double> linspace(double x0, double x1, std::size_t steps) {
  if (steps == 0)
    return {x0};
  std::vector<double> out(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i)
    out[i] = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(steps);
  return out;
}

}  // namespace qpoly

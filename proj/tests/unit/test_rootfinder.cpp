#include "doctest.h"
#include "support.hpp"

#include "qpoly/companion.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/niven.hpp"
#include "qpoly/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace qpoly;
using namespace qpoly::test;

namespace {

const Complex i_{0.0, 1.0};
const double s2 = std::numbers::sqrt2;

double root_distance(const std::vector<Root>& roots, std::vector<Quaternion> expected) {
  if (roots.size() != expected.size())
    return INFINITY;
  double worst = 0.0;
  for (const auto& r : roots) {
    auto it = std::min_element(expected.begin(), expected.end(), [&](const Quaternion& a, const Quaternion& b) {
      return max_abs_diff(a, r.q) < max_abs_diff(b, r.q);
    });
    worst = std::max(worst, max_abs_diff(*it, r.q));
    expected.erase(it);
  }
  return worst;
}

std::vector<Quaternion> apply_quaternion(const QuaternionMatrix& m, const std::vector<Quaternion>& v) {
  std::vector<Quaternion> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace

TEST_CASE("quaternionify eigenvectors") {
  const std::vector<Complex> v1{0, 0, i_, 1};
  CHECK(quaternionify_eigenvector(v1) == std::vector<Quaternion>{-K, J});

  const std::vector<Complex> v2{s2 * (s2 - 1), -i_ * (s2 - 1), i_ * s2, 1};
  const auto phi = quaternionify_eigenvector(v2);
  CHECK(max_abs_diff(phi[0], Quaternion{s2 * (s2 - 1), 0, 0, -s2}) <= 1e-15);
  CHECK(max_abs_diff(phi[1], Quaternion{0, -(s2 - 1), 1, 0}) <= 1e-15);

  const std::vector<Complex> real{1, 2, 0, 0};
  const auto q = quaternionify_eigenvector(real);
  CHECK(q[0] == Quaternion{1.0});
  CHECK(q[1] == Quaternion{2.0});

  const std::vector<Complex> odd{1, 2, 3};
  CHECK_THROWS_AS(quaternionify_eigenvector(odd), DimensionError);
}

TEST_CASE("root extraction") {
  const std::vector<Quaternion> phi{-K, J};
  const auto r = extract_root(phi);
  CHECK(r.q == -I);
  CHECK(r.phi_last == J);

  const std::vector<Complex> v2{s2 * (s2 - 1), -i_ * (s2 - 1), i_ * s2, 1};
  CHECK(max_abs_diff(extract_root(quaternionify_eigenvector(v2)).q, -(I + J)) <= 1e-15);

  const std::vector<Quaternion> degenerate{Quaternion{1.0}, Quaternion{1e-12}};
  CHECK_THROWS_AS(extract_root(degenerate), DegenerateEigenvectorError);
  const std::vector<Quaternion> short_phi{Quaternion{1.0}};
  CHECK_THROWS_AS(extract_root(short_phi), DimensionError);
}

TEST_CASE("right scaling leaves the root unchanged") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    std::vector<Quaternion> phi(2 + t % 5);
    for (auto& p : phi)
      p = random_quaternion(rng);
    const auto u = random_unit(rng);
    auto scaled = phi;
    for (auto& p : scaled)
      p = p * u;
    CHECK(max_abs_diff(extract_root(scaled).q, extract_root(phi).q) <= 1e-12 * (1.0 + norm(extract_root(phi).q)));
  }
}

TEST_CASE("lambda check") {
  const std::vector<Quaternion> phi{-K, J};
  CHECK(check_lambda(phi, i_) == 0.0);

  const auto report = solve_unilateral(cubic());
  for (const auto& r : report.roots)
    CHECK(r.lambda_check <= 1e-12);

  // deviation grows linearly with a perturbation of phi
  const std::vector<Quaternion> d1{-K + Quaternion{1e-6}, J};
  const std::vector<Quaternion> d2{-K + Quaternion{2e-6}, J};
  const double e1 = check_lambda(d1, i_), e2 = check_lambda(d2, i_);
  CHECK(e1 > 0.0);
  CHECK(e2 / e1 == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("privileged eigenvector") {
  const std::vector<Quaternion> phi{-K, J};
  CHECK(privileged_eigenvector(phi) == std::vector<Quaternion>{-I, Quaternion{1.0}});

  const std::vector<Quaternion> positive{I + K, Quaternion{2.0}};
  CHECK(privileged_eigenvector(positive) == positive);

  const auto m = build_companion(quadratic());
  const std::vector<Complex> v2{s2 * (s2 - 1), -i_ * (s2 - 1), i_ * s2, 1};
  for (const auto& v : {std::vector<Complex>{0, 0, i_, 1}, v2}) {
    const auto phi_v = quaternionify_eigenvector(v);
    const auto psi = privileged_eigenvector(phi_v);
    const auto q = extract_root(phi_v).q;
    const auto lhs = apply_quaternion(m, psi);
    for (std::size_t r = 0; r < psi.size(); ++r)
      CHECK(max_abs_diff(lhs[r], psi[r] * q) <= 1e-10);
    CHECK(psi.back().x == 0.0);
    CHECK(psi.back().w > 0.0);
  }
}

TEST_CASE("conjugate representatives") {
  const std::vector<Eigenpair> pairs{{i_, {}, 0, false}, {-i_, {}, 0, false}, {2.0, {}, 0, false},
                                     {Complex(1, 3), {}, 0, false}};
  Diagnostics diag;
  const auto reps = conjugate_representatives(pairs, 1.0, diag);
  // 2 and 1+3i have no partner: warned and kept
  REQUIRE(reps.size() == 3);
  CHECK(diag.warnings.size() == 2);
  for (const auto& r : reps)
    CHECK(r.lambda.imag() >= 0.0);
}

TEST_CASE("solve the quadratic") {
  const auto report = solve_unilateral(quadratic());
  CHECK(report.method == Method::eigenvector);
  CHECK(root_distance(report.roots, {-I, -(I + J)}) <= 1e-9);
  CHECK(report.spheres.empty());
  CHECK(report.zero_count() == 2);
  for (const auto& r : report.roots) {
    CHECK(r.kind == RootKind::isolated);
    CHECK(r.residual <= 1e-10);
    CHECK(r.lambda.imag() >= 0.0);
  }
  CHECK(report.diagnostics.eigen.size() == 4);
}

TEST_CASE("solve the cubic") {
  const auto report = solve_unilateral(cubic());
  CHECK(root_distance(report.roots, {-K, (Quaternion{s2} + J - K) / 2.0, (Quaternion{-s2} + J - K) / 2.0}) <= 1e-9);
  std::vector<Complex> lambdas;
  for (const auto& r : report.roots)
    lambdas.push_back(r.lambda);
  std::sort(lambdas.begin(), lambdas.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  CHECK(std::abs(lambdas[0] - Complex(-1, 1) / s2) <= 1e-9);
  CHECK(std::abs(lambdas[1] - i_) <= 1e-9);
  CHECK(std::abs(lambdas[2] - Complex(1, 1) / s2) <= 1e-9);
}

TEST_CASE("spherical zeros") {
  const UnilateralPolynomial p({Quaternion{-1.0}, Quaternion{}});
  const auto report = solve_unilateral(p);
  REQUIRE(report.spheres.size() == 1);
  CHECK(std::abs(report.spheres[0].re) <= 1e-12);
  CHECK(report.spheres[0].imag_norm == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(report.roots.size() == 1);
  CHECK(report.roots[0].kind == RootKind::spherical_representative);
  CHECK(report.roots[0].residual <= 1e-10);
  CHECK(report.zero_count() == 2);

  // q^2 - 2q + 5 = (q - (1 + 2u))(q - (1 - 2u)) for every unit imaginary u
  const auto shifted = solve_unilateral(UnilateralPolynomial({Quaternion{-5.0}, Quaternion{2.0}}));
  REQUIRE(shifted.spheres.size() == 1);
  CHECK(shifted.spheres[0].re == doctest::Approx(1.0));
  CHECK(shifted.spheres[0].imag_norm == doctest::Approx(2.0));
}

TEST_CASE("defective companions are flagged") {
  const auto report = solve_unilateral(UnilateralPolynomial({Quaternion{-1.0}, Quaternion{2.0}}));
  CHECK(report.zero_count() == 2);
  for (const auto& r : report.roots)
    CHECK(max_abs_diff(r.q, Quaternion{1.0}) <= 1e-7);
  CHECK_FALSE(report.diagnostics.warnings.empty());
}

TEST_CASE("degree one and errors") {
  const auto report = solve_unilateral(UnilateralPolynomial({I + K}));
  REQUIRE(report.roots.size() == 1);
  CHECK(report.roots[0].q == I + K);
  CHECK(report.roots[0].residual == 0.0);
  CHECK_THROWS_AS(solve_unilateral(quadratic(), 0.0), DomainError);
  CHECK_THROWS_AS(solve_unilateral(quadratic(), -1.0), DomainError);
}

TEST_CASE("random polynomials") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto p = random_polynomial(rng, n);
    const auto report = solve_unilateral(p);
    CHECK(report.zero_count() == n);
    for (const auto& r : report.roots) {
      CHECK(r.residual <= residual_bound(p, kDefaultTol));
      CHECK(norm(evaluate(p, r.q)) == r.residual);
      CHECK(std::abs(r.q.w - r.lambda.real()) <= 1e-9);
      CHECK(std::abs(norm(r.q.imag()) - r.lambda.imag()) <= 1e-9);
    }
    if (report.spheres.empty() && n <= 3)
      CHECK(report_distance(report, solve_spv(p)) <= 1e-7);
  }
}

TEST_CASE("bilateral quadratic") {
  const BilateralQuadratic bq{I, J, K};
  const auto direct = solve_bilateral_direct(bq);
  CHECK(root_distance(direct.roots, {-J, I}) <= 1e-9);
  for (const auto& r : direct.roots) {
    CHECK(r.lambda_check <= 1e-9);
    CHECK(norm(evaluate_bilateral(bq, r.q)) <= 1e-10);
  }
  std::vector<double> ims;
  for (const auto& r : direct.roots)
    ims.push_back(r.lambda.imag());
  std::sort(ims.begin(), ims.end());
  CHECK(ims[0] == doctest::Approx(0.0));
  CHECK(ims[1] == doctest::Approx(s2));

  const auto reduced = solve_bilateral_reduced(bq);
  CHECK(root_distance(reduced.roots, {-J, I}) <= 1e-9);
  CHECK(report_distance(direct, reduced) <= 1e-10);

  const auto both = solve_bilateral(bq);
  CHECK(root_distance(both.roots, {-J, I}) <= 1e-9);
}

TEST_CASE("bilateral with beta1 = 0 matches the unilateral solver") {
  const auto b = solve_bilateral({-J, Quaternion{}, K - Quaternion{1.0}});
  const auto u = solve_unilateral(quadratic());
  CHECK(report_distance(b, u) <= 1e-12);
}

TEST_CASE("random bilaterals satisfy the lambda check") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const BilateralQuadratic bq{random_bounded(rng, 2.0), random_bounded(rng, 2.0), random_bounded(rng, 2.0)};
    const auto report = solve_bilateral(bq);
    CHECK(report.zero_count() == 2);
    for (const auto& r : report.roots) {
      if (r.kind == RootKind::isolated)
        CHECK(r.lambda_check <= 1e-9);
      CHECK(norm(evaluate_bilateral(bq, r.q)) <= 1e-9 * 9.0);
    }
  }
}

TEST_CASE("report distance") {
  const auto a = solve_unilateral(quadratic());
  CHECK(report_distance(a, a) == 0.0);
  const auto c = solve_unilateral(cubic());
  CHECK(std::isinf(report_distance(a, c)));
}

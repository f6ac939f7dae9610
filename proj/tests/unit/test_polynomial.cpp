#include "doctest.h"
#include "support.hpp"

#include "qpoly/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace qpoly;
using namespace qpoly::test;

TEST_CASE("construction") {
  CHECK_THROWS_AS(UnilateralPolynomial({}), DomainError);
  const auto p = quadratic();
  CHECK(p.degree() == 2);
  CHECK(p[0] == K - Quaternion{1.0});
  CHECK(p[1] == -J);
  const Quaternion human[2] = {Quaternion{1.0} - K, J};
  CHECK(UnilateralPolynomial::from_human(human) == p);
  CHECK(p.max_coeff_norm() == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("evaluate examples") {
  const auto p = quadratic();
  CHECK(evaluate(p, -I) == Quaternion{});
  CHECK(evaluate(p, -(I + J)) == Quaternion{});
  CHECK(evaluate(p, Quaternion{}) == Quaternion{1.0} - K);

  const double s2 = std::numbers::sqrt2;
  const auto c = cubic();
  CHECK(norm(evaluate(c, -K)) <= 1e-15);
  CHECK(norm(evaluate(c, (Quaternion{s2} + J - K) / 2.0)) <= 1e-12);
  CHECK(norm(evaluate(c, (Quaternion{-s2} + J - K) / 2.0)) <= 1e-12);
  // the form (i - k +- sqrt2)/2 misses by sqrt2
  CHECK(norm(evaluate(c, (Quaternion{s2} + I - K) / 2.0)) == doctest::Approx(s2));
}

TEST_CASE("degree one") {
  const UnilateralPolynomial p({J});
  CHECK(evaluate(p, J) == Quaternion{});
  CHECK(evaluate(p, Quaternion{}) == -J);
}

TEST_CASE("monic leading behaviour") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = random_polynomial(rng, n);
    const double t = 1e6;
    CHECK(norm(evaluate(p, Quaternion{t})) / std::pow(t, static_cast<double>(n)) == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("complex subfield matches a complex oracle") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<Complex> a(n);
    std::vector<Quaternion> aq(n);
    for (std::size_t s = 0; s < n; ++s) {
      a[s] = {g(rng), g(rng)};
      aq[s] = Quaternion::from_complex(a[s]);
    }
    const Complex z{g(rng), g(rng)};
    Complex expect = std::pow(z, static_cast<int>(n));
    for (std::size_t s = 0; s < n; ++s)
      expect -= a[s] * std::pow(z, static_cast<int>(s));
    const auto got = evaluate(UnilateralPolynomial(aq), Quaternion::from_complex(z));
    CHECK(got.y == 0.0);
    CHECK(got.z == 0.0);
    CHECK(std::abs(Complex(got.w, got.x) - expect) <= 1e-13 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("bilateral evaluation") {
  const BilateralQuadratic bq{I, J, K};
  CHECK(evaluate_bilateral(bq, -J) == Quaternion{});
  CHECK(evaluate_bilateral(bq, I) == Quaternion{});
  CHECK(evaluate_bilateral({}, Quaternion{}) == Quaternion{});
}

TEST_CASE("bilateral reduction") {
  const auto red = bilateral_to_unilateral({I, J, K});
  CHECK(red.poly[1] == I + J);
  CHECK(red.poly[0] == Quaternion{});
  CHECK(red.shift == J);

  const auto same = bilateral_to_unilateral({-J, Quaternion{}, K - Quaternion{1.0}});
  CHECK(same.poly == quadratic());

  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const BilateralQuadratic b{random_quaternion(rng), random_quaternion(rng), random_quaternion(rng)};
    const auto r = bilateral_to_unilateral(b);
    const auto p = random_quaternion(rng);
    const double scale = 1.0 + norm(p) * norm(p) + b.max_coeff_norm() * (1.0 + norm(p) + b.max_coeff_norm());
    CHECK(max_abs_diff(evaluate(r.poly, p + r.shift), evaluate_bilateral(b, p)) <= 1e-12 * scale);
  }
}

#include "doctest.h"
#include "support.hpp"

#include "qpoly/errors.hpp"

#include <cmath>
#include <numbers>

using namespace qpoly;
using namespace qpoly::test;

TEST_CASE("Hamilton multiplication table") {
  const Quaternion one{1.0};
  const Quaternion basis[4] = {one, I, J, K};
  // table[r][c] = basis[r] * basis[c]
  const Quaternion table[4][4] = {
      {one, I, J, K},
      {I, -one, K, -J},
      {J, -K, -one, I},
      {K, J, -I, -one},
  };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(mul(basis[r], basis[c]) == table[r][c]);
}

TEST_CASE("product examples") {
  CHECK(I * J == K);
  CHECK(J * I == -K);
  CHECK((-J) * (-I) == -K);
  const Quaternion q = -I;
  CHECK(q * q + J * q + (Quaternion{1.0} - K) == Quaternion{});
}

TEST_CASE("norm is multiplicative and product associative") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_quaternion(rng, 3.0), b = random_quaternion(rng, 3.0), c = random_quaternion(rng);
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) <= 1e-12 * (1.0 + norm(a) * norm(b) * norm(c)));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Quaternion{1.0}) == Quaternion{1.0});
  CHECK(inverse(J) == -J);
  CHECK(max_abs_diff(inverse(Quaternion{1.0} + J), (Quaternion{1.0} - J) / 2.0) <= 1e-16);
  CHECK_THROWS_AS(inverse(Quaternion{}), DomainError);
  CHECK_THROWS_WITH(inverse(Quaternion{}), "non-invertible quaternion");

  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const auto q = random_quaternion(rng);
    CHECK(max_abs_diff(q * inverse(q), Quaternion{1.0}) <= 1e-12);
    CHECK(max_abs_diff(inverse(q) * q, Quaternion{1.0}) <= 1e-12);
  }
}

TEST_CASE("symplectic split and join") {
  const auto p = symplectic_split(K - Quaternion{1.0});
  CHECK(p.zc == Complex(-1.0, 0.0));
  CHECK(p.wc == Complex(0.0, -1.0));
  CHECK(symplectic_split(Quaternion{1.0}).wc == Complex{});
  CHECK(symplectic_split(J).zc == Complex{});
  CHECK(symplectic_split(J).wc == Complex(1.0));

  CHECK(symplectic_join({Complex{}, Complex(0.0, 1.0)}) == -K);
  CHECK(symplectic_join({Complex(2.0, -3.0), Complex{}}) == Quaternion::from_complex({2.0, -3.0}));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const auto q = random_quaternion(rng);
    CHECK(symplectic_join(symplectic_split(q)) == q);
    // q = zc + j wc
    const auto s = symplectic_split(q);
    CHECK(max_abs_diff(Quaternion::from_complex(s.zc) + J * Quaternion::from_complex(s.wc), q) <= 1e-15);
  }
}

TEST_CASE("exp") {
  CHECK(qpoly::exp(Quaternion{}) == Quaternion{1.0});
  CHECK(max_abs_diff(qpoly::exp(I * std::numbers::pi), Quaternion{-1.0}) <= 1e-15);
  CHECK(max_abs_diff(qpoly::exp(Quaternion{0.5, 1e-12, 0.0, 0.0}), Quaternion{std::exp(0.5), std::exp(0.5) * 1e-12}) <= 1e-15);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_quaternion(rng);
    Quaternion term{1.0}, sum{1.0};
    for (int m = 1; m < 40; ++m) {
      term = term * q / static_cast<double>(m);
      sum += term;
    }
    CHECK(max_abs_diff(qpoly::exp(q), sum) <= 1e-12 * std::max(1.0, norm(sum)));
  }
}

TEST_CASE("similarity rotation") {
  const auto id = similarity_rotation(Quaternion{1.0});
  CHECK(id.angle == 0.0);
  CHECK(id.axis == std::array<double, 3>{1.0, 0.0, 0.0});
  CHECK(similarity_rotation(Quaternion{-1.0}).angle == 0.0);

  const Quaternion u = (Quaternion{1.0} + K) / std::numbers::sqrt2;
  const auto r = similarity_rotation(u);
  CHECK(r.angle == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(r.axis[2] == doctest::Approx(1.0));
  CHECK(max_abs_diff(u * I * conj(u), J) <= 1e-15);
  CHECK(similarity_rotation(I).angle == doctest::Approx(std::numbers::pi));

  CHECK_THROWS_AS(similarity_rotation(Quaternion{2.0}), DomainError);
  CHECK_THROWS_AS(similarity_rotation(Quaternion{}), DomainError);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto v = random_unit(rng);
    const Quaternion lambda{0.0, 2.0};
    const Quaternion image = v * lambda * conj(v);
    const auto rotated = rotate(similarity_rotation(v), {2.0, 0.0, 0.0});
    CHECK(norm(image.imag()) == doctest::Approx(2.0).epsilon(1e-12));
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(rotated[c] - image.vec()[c]) <= 1e-12);

    std::normal_distribution<double> g;
    const Complex l{g(rng), g(rng)};
    const Quaternion s = v * Quaternion::from_complex(l) * conj(v);
    CHECK(std::abs(s.w - l.real()) <= 1e-12);
    CHECK(std::abs(norm(s) - std::abs(l)) <= 1e-12);
  }
}

TEST_CASE("text form round trip") {
  CHECK(parse_quaternion("1-k") == Quaternion{1.0, 0.0, 0.0, -1.0});
  CHECK(parse_quaternion("-j") == -J);
  CHECK(parse_quaternion("0") == Quaternion{});
  CHECK(parse_quaternion(" 2.5k - 3 + i ") == Quaternion{-3.0, 1.0, 0.0, 2.5});
  CHECK(parse_quaternion("1e-3j") == Quaternion{0.0, 0.0, 1e-3, 0.0});
  CHECK(to_string(Quaternion{}) == "0");
  CHECK(to_string(-I) == "-i");
  CHECK(to_string(Quaternion{1.0, 0.0, 0.0, -1.0}) == "1-k");

  CHECK_THROWS_AS(parse_quaternion(""), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1+i+i"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1 2"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("x"), ParseError);
  try {
    parse_quaternion("1+q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }

  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    const auto q = random_quaternion(rng, 10.0);
    CHECK(parse_quaternion(to_string(q)) == q);
  }
}

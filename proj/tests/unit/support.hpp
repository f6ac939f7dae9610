#pragma once

#include "qpoly/matrix.hpp"
#include "qpoly/polynomial.hpp"
#include "qpoly/quaternion.hpp"

#include <random>

namespace qpoly::test {

inline const Quaternion I = Quaternion::i();
inline const Quaternion J = Quaternion::j();
inline const Quaternion K = Quaternion::k();

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng), g(rng), g(rng)};
}

inline Quaternion random_unit(std::mt19937_64& rng) {
  Quaternion u = random_quaternion(rng);
  return u / norm(u);
}

// Coefficient norm uniform in [0, max_norm].
inline Quaternion random_bounded(std::mt19937_64& rng, double max_norm) {
  std::uniform_real_distribution<double> r(0.0, max_norm);
  return random_unit(rng) * r(rng);
}

inline QuaternionMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  QuaternionMatrix m(n, n);
  for (auto& e : m.entries())
    e = random_quaternion(rng);
  return m;
}

inline ComplexMatrix random_complex_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (auto& e : m.entries())
    e = {g(rng), g(rng)};
  return m;
}

inline UnilateralPolynomial random_polynomial(std::mt19937_64& rng, std::size_t n, double max_norm = 2.0) {
  std::vector<Quaternion> a(n);
  for (auto& c : a)
    c = random_bounded(rng, max_norm);
  return UnilateralPolynomial(a);
}

// The quadratic q^2 + j q + (1-k) and the cubic q^3 + k q^2 + i q - j.
inline UnilateralPolynomial quadratic() { return UnilateralPolynomial({K - Quaternion{1.0}, -J}); }
inline UnilateralPolynomial cubic() { return UnilateralPolynomial({J, -I, -K}); }

}  // namespace qpoly::test

#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "qpoly/errors.hpp"

namespace qpoly {

using Complex = std::complex<double>;

/// Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  /// Embeds a complex number into the span of {1, i}.
  static constexpr Quaternion from_complex(Complex c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr std::array<double, 3> vec() const { return {x, y, z}; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product; i*j = k, j*i = -k.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
double norm(const Quaternion& q);

/// conj(q) / |q|^2. Throws DomainError for q = 0.
Quaternion inverse(const Quaternion& q);

/// Symplectic components of q = zc + j * wc.
struct ComplexPair {
  Complex zc;
  Complex wc;
};

/// zc = w + x i, wc = y - z i (forced by j*i = -k).
constexpr ComplexPair symplectic_split(const Quaternion& q) {
  return {Complex{q.w, q.x}, Complex{q.y, -q.z}};
}

constexpr Quaternion symplectic_join(const ComplexPair& p) {
  return {p.zc.real(), p.zc.imag(), p.wc.real(), -p.wc.imag()};
}

Quaternion exp(const Quaternion& q);

/// Rotation of R^3 induced by v -> u v conj(u) on pure quaternions.
struct Rotation {
  double angle = 0.0;                       // radians
  std::array<double, 3> axis{1.0, 0.0, 0.0};  // unit vector
};

/// Angle 2*atan(|Im u| / Re u) and normalized axis Im u. u = +-1 gives angle 0
/// with axis (1,0,0). Throws DomainError unless | |u| - 1 | <= 1e-9.
Rotation similarity_rotation(const Quaternion& u);

/// Rodrigues rotation of v by r.
std::array<double, 3> rotate(const Rotation& r, const std::array<double, 3>& v);

/// Max-abs componentwise distance.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

// Text form `a+bi+cj+dk`; terms optional, in any order, one per basis element.
std::string to_string(const Quaternion& q, int precision = 17);
Quaternion parse_quaternion(std::string_view text);

}  // namespace qpoly

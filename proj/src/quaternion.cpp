#include "qpoly/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qpoly {

double norm(const Quaternion& q) {
  return std::sqrt(norm2(q));
}

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0)
    throw DomainError("non-invertible quaternion");
  return conj(q) / n2;
}

Quaternion exp(const Quaternion& q) {
  const double t = std::hypot(q.x, q.y, q.z);
  const double ew = std::exp(q.w);
  // sin(t)/t, series below 1e-8 where the quotient loses digits
  const double sinc = t < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
  return {ew * std::cos(t), ew * sinc * q.x, ew * sinc * q.y, ew * sinc * q.z};
}

Rotation similarity_rotation(const Quaternion& u) {
  if (std::abs(norm(u) - 1.0) > 1e-9)
    throw DomainError("similarity_rotation requires a unit quaternion");
  const double s = std::hypot(u.x, u.y, u.z);
  Rotation r;
  if (s == 0.0)
    return r;
  r.axis = {u.x / s, u.y / s, u.z / s};
  r.angle = u.w == 0.0 ? std::numbers::pi : 2.0 * std::atan(s / u.w);
  return r;
}

std::array<double, 3> rotate(const Rotation& r, const std::array<double, 3>& v) {
  const auto& n = r.axis;
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  const double dot = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
  const std::array<double, 3> cross{n[1] * v[2] - n[2] * v[1], n[2] * v[0] - n[0] * v[2],
                                    n[0] * v[1] - n[1] * v[0]};
  std::array<double, 3> out{};
  for (int a = 0; a < 3; ++a)
    out[a] = v[a] * c + cross[a] * s + n[a] * dot * (1.0 - c);
  return out;
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

namespace {

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace

std::string to_string(const Quaternion& q, int precision) {
  const double parts[4] = {q.w, q.x, q.y, q.z};
  const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int a = 0; a < 4; ++a) {
    const double v = parts[a];
    if (v == 0.0)
      continue;
    std::string mag;
    if (a > 0 && std::abs(v) == 1.0)
      mag = "";
    else
      mag = format_number(std::abs(v), precision);
    if (v < 0.0)
      out += '-';
    else if (!out.empty())
      out += '+';
    out += mag;
    out += units[a];
  }
  return out.empty() ? "0" : out;
}

Quaternion parse_quaternion(std::string_view text) {
  const char* const begin = text.data();
  const char* const end = begin + text.size();
  const char* p = begin;
  auto pos = [&] { return static_cast<std::size_t>(p - begin); };
  auto skip_ws = [&] {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r'))
      ++p;
  };

  double parts[4] = {0.0, 0.0, 0.0, 0.0};
  bool seen[4] = {false, false, false, false};
  bool first = true;

  skip_ws();
  if (p == end)
    throw ParseError("empty quaternion literal", pos());

  while (true) {
    skip_ws();
    if (p == end)
      break;
    double sign = 1.0;
    if (*p == '+' || *p == '-') {
      sign = *p == '-' ? -1.0 : 1.0;
      ++p;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos());
    }
    first = false;

    double magnitude = 1.0;
    bool has_number = false;
    if (p != end && (std::isdigit(static_cast<unsigned char>(*p)) || *p == '.')) {
      auto [next, ec] = std::from_chars(p, end, magnitude);
      if (ec != std::errc{})
        throw ParseError("malformed number", pos());
      p = next;
      has_number = true;
      skip_ws();
    }

    int basis = 0;
    if (p != end && (*p == 'i' || *p == 'j' || *p == 'k')) {
      basis = *p == 'i' ? 1 : (*p == 'j' ? 2 : 3);
      ++p;
    } else if (!has_number) {
      throw ParseError("expected a number or one of i, j, k", pos());
    }
    if (seen[basis])
      throw ParseError("repeated basis term", pos());
    seen[basis] = true;
    parts[basis] = sign * magnitude;
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace qpoly

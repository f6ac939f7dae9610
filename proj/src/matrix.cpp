#include "qpoly/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qpoly {

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(c, r) = std::conj(m(r, c));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(c, r) = m(r, c);
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.entries())
    s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
  double out = 0.0;
  for (const auto& v : m.entries())
    out = std::max(out, std::abs(v));
  return out;
}

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> x) {
  if (x.size() != m.cols())
    throw DimensionError("matrix-vector shape mismatch");
  std::vector<Complex> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < m.cols(); ++c)
      acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& e : v)
    s += std::norm(e);
  return std::sqrt(s);
}

}  // namespace qpoly

#include "qpoly/companion.hpp"

namespace qpoly {

namespace {

void require_square(const QuaternionMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw DimensionError("complex translation needs a non-empty square quaternionic matrix");
}

}  // namespace

QuaternionMatrix build_companion(const UnilateralPolynomial& poly) {
  const std::size_t n = poly.degree();
  QuaternionMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    m(0, c) = poly[n - 1 - c];
  for (std::size_t r = 1; r < n; ++r)
    m(r, r - 1) = Quaternion{1.0};
  return m;
}

QuaternionMatrix build_generalized(const BilateralQuadratic& bq) {
  return QuaternionMatrix(2, 2, {bq.alpha1, bq.alpha0, Quaternion{1.0}, bq.beta1});
}

SymplecticParts split_ZW(const QuaternionMatrix& m) {
  SymplecticParts out{ComplexMatrix(m.rows(), m.cols()), ComplexMatrix(m.rows(), m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto [z, w] = symplectic_split(m(r, c));
      out.Z(r, c) = z;
      out.W(r, c) = w;
    }
  return out;
}

QuaternionMatrix join_ZW(const SymplecticParts& parts) {
  const auto& Z = parts.Z;
  const auto& W = parts.W;
  if (Z.rows() != W.rows() || Z.cols() != W.cols())
    throw DimensionError("Z and W blocks differ in shape");
  QuaternionMatrix m(Z.rows(), Z.cols());
  for (std::size_t r = 0; r < Z.rows(); ++r)
    for (std::size_t c = 0; c < Z.cols(); ++c)
      m(r, c) = symplectic_join({Z(r, c), W(r, c)});
  return m;
}

ComplexMatrix translate_block(const QuaternionMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto [z, w] = symplectic_split(m(r, c));
      out(r, c) = z;
      out(r, n + c) = -std::conj(w);
      out(n + r, c) = w;
      out(n + r, n + c) = std::conj(z);
    }
  return out;
}

ComplexMatrix translate_interleaved(const QuaternionMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto [z, w] = symplectic_split(m(r, c));
      out(2 * r, 2 * c) = z;
      out(2 * r, 2 * c + 1) = -std::conj(w);
      out(2 * r + 1, 2 * c) = w;
      out(2 * r + 1, 2 * c + 1) = std::conj(z);
    }
  return out;
}

ComplexMatrix permutation_matrix(std::size_t n) {
  ComplexMatrix p(2 * n, 2 * n);
  for (std::size_t m = 0; m < n; ++m) {
    p(2 * m, m) = 1.0;
    p(2 * m + 1, n + m) = 1.0;
  }
  return p;
}

double check_equivalence(const QuaternionMatrix& m) {
  const ComplexMatrix p = permutation_matrix(m.rows());
  const ComplexMatrix permuted = p * translate_block(m) * transpose(p);
  return max_abs(translate_interleaved(m) - permuted);
}

}  // namespace qpoly

#pragma once

#include <cstddef>

#include "qpoly/matrix.hpp"
#include "qpoly/polynomial.hpp"

namespace qpoly {

/// n x n matrix with first row (a_{n-1}, ..., a_0) and ones on the subdiagonal.
QuaternionMatrix build_companion(const UnilateralPolynomial& poly);

/// [[alpha1, alpha0], [1, beta1]]; equals build_companion when beta1 = 0.
QuaternionMatrix build_generalized(const BilateralQuadratic& bq);

/// Entrywise symplectic parts, m = Z + j W.
struct SymplecticParts {
  ComplexMatrix Z;
  ComplexMatrix W;
};

SymplecticParts split_ZW(const QuaternionMatrix& m);
QuaternionMatrix join_ZW(const SymplecticParts& parts);

/// Block complex form [[Z, -conj(W)], [W, conj(Z)]]; acts on stacked vectors
/// (omega_1..omega_n, sigma_1..sigma_n) where phi_m = omega_m + j sigma_m.
ComplexMatrix translate_block(const QuaternionMatrix& m);

/// Per-entry 2x2 blocks [[z, -conj(w)], [w, conj(z)]]; acts on interleaved
/// vectors (omega_1, sigma_1, ..., omega_n, sigma_n).
ComplexMatrix translate_interleaved(const QuaternionMatrix& m);

/// 2n x 2n 0/1 matrix sending stacked to interleaved ordering. Entry (r, s)
/// is 1 for (1,1), (2,n+1), (3,2), (4,n+2), ... in 1-based indices.
///
/// This is an involution only for n <= 2; its inverse in general is the
/// transpose.
ComplexMatrix permutation_matrix(std::size_t n);

/// Max-abs difference between translate_interleaved(m) and
/// P translate_block(m) P^T. Zero for every square m.
double check_equivalence(const QuaternionMatrix& m);

}  // namespace qpoly

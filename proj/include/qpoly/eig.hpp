#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpoly/matrix.hpp"

namespace qpoly {

struct Eigenpair {
  Complex lambda;
  std::vector<Complex> vector;  // unit 2-norm
  double residual = 0.0;        // |M v - lambda v|_2
  // Set when the eigenvalue is repeated but its eigenspace is too small to
  // supply an independent vector; `vector` then repeats an earlier one.
  bool deficient = false;
};

/// QR iteration or inverse iteration failed to converge. For QR failures
/// `partial()` holds the eigenvalues deflated before giving up.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, std::vector<Complex> partial = {})
      : std::runtime_error(what), partial_{std::move(partial)} {}

  const std::vector<Complex>& partial() const noexcept { return partial_; }

private:
  std::vector<Complex> partial_;
};

struct HessenbergForm {
  ComplexMatrix H;  // upper Hessenberg
  ComplexMatrix Q;  // unitary, Q H Q^H = m
};

/// Householder reduction to upper Hessenberg form.
HessenbergForm hessenberg(const ComplexMatrix& m);

/// Diagonal similarity D^{-1} m D with power-of-two entries that equalizes
/// row and column norms.
ComplexMatrix balance(const ComplexMatrix& m);

/// All eigenvalues with multiplicity, sorted by (real, imag). Values with
/// |Im| <= 1e-9 |m|_F are snapped onto the real axis.
std::vector<Complex> eigenvalues(const ComplexMatrix& m, double tol);

/// Eigenvalues plus one eigenvector each. Repeated eigenvalues receive
/// independent vectors from their eigenspace where it is large enough.
std::vector<Eigenpair> eigen_all(const ComplexMatrix& m, double tol);

/// Inverse iteration on (m - lambda~ I), lambda~ = lambda + 1e-10 |m|_F,
/// started from (1, ..., 1)/sqrt(dim) (then e_0, e_1, ... if that stalls) and
/// kept orthogonal to `exclude` (which must be orthonormal). Throws ConvergenceError if the residual
/// never drops to tol |m|_F within 50 steps.
std::vector<Complex> eigenvector_for(const ComplexMatrix& m, Complex lambda, double tol,
                                     std::span<const std::vector<Complex>> exclude = {});

}  // namespace qpoly

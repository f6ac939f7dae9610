#pragma once

#include <span>
#include <string>
#include <vector>

#include "qpoly/companion.hpp"
#include "qpoly/eig.hpp"
#include "qpoly/polynomial.hpp"

namespace qpoly {

inline constexpr double kDefaultTol = 1e-9;

enum class RootKind { isolated, spherical_representative };
enum class Method { eigenvector, niven, spv };

const char* to_string(RootKind kind);
const char* to_string(Method method);

struct Root {
  Quaternion q;
  Complex lambda;       // source eigenvalue, Im >= 0
  Quaternion phi_last;  // last eigenvector component used in the extraction
  double residual = 0.0;
  RootKind kind = RootKind::isolated;
  double lambda_check = 0.0;  // |recovered lambda - lambda|
};

/// Family of zeros {q : Re q = re, |Im q| = imag_norm}; counts twice.
struct Sphere {
  double re = 0.0;
  double imag_norm = 0.0;
};

struct EigenResidual {
  Complex lambda;
  double residual = 0.0;
};

struct Diagnostics {
  std::vector<EigenResidual> eigen;
  std::vector<std::string> warnings;
};

struct SolveReport {
  std::vector<Root> roots;
  std::vector<Sphere> spheres;
  Method method = Method::eigenvector;
  Diagnostics diagnostics;

  /// Isolated roots plus two per sphere; equals the degree when every
  /// eigenvalue class was accounted for.
  std::size_t zero_count() const;
};

/// The last eigenvector component is (numerically) zero. A true companion
/// eigenvector never has a zero last component.
class DegenerateEigenvectorError : public DomainError {
public:
  using DomainError::DomainError;
};

/// (omega_1..omega_n, sigma_1..sigma_n) -> (omega_m + j sigma_m).
std::vector<Quaternion> quaternionify_eigenvector(std::span<const Complex> v);

struct ExtractedRoot {
  Quaternion q;
  Quaternion phi_last;
};

/// q = phi_{n-1} phi_n^{-1}. Needs n >= 2; throws DegenerateEigenvectorError
/// when |phi_n| < 1e-10 |Phi|.
ExtractedRoot extract_root(std::span<const Quaternion> phi);

/// |phi_n^{-1} phi_{n-1} - lambda|
double check_lambda(std::span<const Quaternion> phi, Complex lambda);

/// |phi_2^{-1} phi_1 + phi_2^{-1} beta1 phi_2 - lambda| for a generalized
/// companion eigenvector.
double check_lambda_bilateral(std::span<const Quaternion> phi, const Quaternion& beta1,
                              Complex lambda);

/// Phi phi_n^{-1} |phi_n|: right eigenvector whose eigenvalue is the zero itself.
std::vector<Quaternion> privileged_eigenvector(std::span<const Quaternion> phi);

/// One eigenpair per conjugate class (Im lambda >= 0). Eigenvalues are
/// matched greedily to conjugates within 1e-8 max(|M|_F, 1); unmatched ones
/// are warned about and kept only if Im >= 0.
std::vector<Eigenpair> conjugate_representatives(const std::vector<Eigenpair>& pairs,
                                                 double matrix_norm, Diagnostics& diag);

/// Residual bound tol (1 + max |a_s|)^n used for verification.
double residual_bound(const UnilateralPolynomial& poly, double tol);

SolveReport solve_unilateral(const UnilateralPolynomial& poly, double tol = kDefaultTol);

/// Spheres in bilateral reports describe the similarity class of q = p + beta1.
///
/// Generalized-companion route, cross-checked against the reduced unilateral
/// route; throws VerificationError if they disagree.
SolveReport solve_bilateral(const BilateralQuadratic& bq, double tol = kDefaultTol);

/// Generalized-companion route only.
SolveReport solve_bilateral_direct(const BilateralQuadratic& bq, double tol = kDefaultTol);

/// Reduction route: solve q^2 - (alpha1+beta1) q - (alpha0 - alpha1 beta1)
/// and shift p = q - beta1.
SolveReport solve_bilateral_reduced(const BilateralQuadratic& bq, double tol = kDefaultTol);

/// Largest distance in a greedy nearest matching of the isolated/representative
/// roots of two reports; +inf if their shapes differ.
double report_distance(const SolveReport& a, const SolveReport& b);

}  // namespace qpoly

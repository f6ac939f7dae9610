#include "qpoly/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace qpoly {

const char* to_string(RootKind kind) {
  return kind == RootKind::isolated ? "isolated" : "spherical-representative";
}

const char* to_string(Method method) {
  switch (method) {
    case Method::eigenvector: return "eigenvector";
    case Method::niven: return "niven";
    case Method::spv: return "spv";
  }
  return "unknown";
}

std::size_t SolveReport::zero_count() const {
  std::size_t isolated = 0;
  for (const auto& r : roots)
    if (r.kind == RootKind::isolated)
      ++isolated;
  return isolated + 2 * spheres.size();
}

std::vector<Quaternion> quaternionify_eigenvector(std::span<const Complex> v) {
  if (v.size() % 2 != 0)
    throw DimensionError("complex eigenvector must have even length");
  const std::size_t n = v.size() / 2;
  std::vector<Quaternion> phi(n);
  for (std::size_t m = 0; m < n; ++m)
    phi[m] = symplectic_join({v[m], v[n + m]});
  return phi;
}

namespace {

const Quaternion& checked_last(std::span<const Quaternion> phi) {
  if (phi.size() < 2)
    throw DimensionError("root extraction needs at least two eigenvector components");
  double total = 0.0;
  for (const auto& p : phi)
    total += norm2(p);
  const Quaternion& last = phi.back();
  if (norm(last) < 1e-10 * std::sqrt(total) || norm2(last) == 0.0)
    throw DegenerateEigenvectorError("last eigenvector component vanishes");
  return last;
}

}  // namespace

ExtractedRoot extract_root(std::span<const Quaternion> phi) {
  const Quaternion& last = checked_last(phi);
  return {phi[phi.size() - 2] * inverse(last), last};
}

double check_lambda(std::span<const Quaternion> phi, Complex lambda) {
  const Quaternion& last = checked_last(phi);
  return norm(inverse(last) * phi[phi.size() - 2] - Quaternion::from_complex(lambda));
}

double check_lambda_bilateral(std::span<const Quaternion> phi, const Quaternion& beta1,
                              Complex lambda) {
  const Quaternion& last = checked_last(phi);
  const Quaternion inv = inverse(last);
  return norm(inv * phi[phi.size() - 2] + inv * beta1 * last - Quaternion::from_complex(lambda));
}

std::vector<Quaternion> privileged_eigenvector(std::span<const Quaternion> phi) {
  const Quaternion& last = checked_last(phi);
  const Quaternion right = inverse(last) * norm(last);
  std::vector<Quaternion> out(phi.size());
  for (std::size_t m = 0; m + 1 < phi.size(); ++m)
    out[m] = phi[m] * right;
  out.back() = Quaternion{norm(last)};
  return out;
}

std::vector<Eigenpair> conjugate_representatives(const std::vector<Eigenpair>& pairs,
                                                 double matrix_norm, Diagnostics& diag) {
  const double pair_tol = 1e-8 * std::max(matrix_norm, 1.0);
  std::vector<bool> used(pairs.size(), false);
  std::vector<Eigenpair> reps;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (used[i])
      continue;
    used[i] = true;
    const Complex target = std::conj(pairs[i].lambda);
    std::size_t best = pairs.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (used[j])
        continue;
      const double d = std::abs(pairs[j].lambda - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < pairs.size() && best_dist <= pair_tol) {
      used[best] = true;
      const Eigenpair& a = pairs[i];
      const Eigenpair& b = pairs[best];
      reps.push_back(a.lambda.imag() >= b.lambda.imag() ? a : b);
      continue;
    }
    std::ostringstream msg;
    msg << "eigenvalue (" << pairs[i].lambda.real() << ", " << pairs[i].lambda.imag()
        << ") has no conjugate partner within " << pair_tol;
    diag.warnings.push_back(msg.str());
    if (pairs[i].lambda.imag() >= 0.0)
      reps.push_back(pairs[i]);
  }
  return reps;
}

double residual_bound(const UnilateralPolynomial& poly, double tol) {
  return tol * std::pow(1.0 + poly.max_coeff_norm(), static_cast<double>(poly.degree()));
}

namespace {

struct Problem {
  QuaternionMatrix companion;
  std::function<Quaternion(const Quaternion&)> evaluate;
  std::function<double(std::span<const Quaternion>, Complex)> lambda_check;
  double bound = 0.0;
};

std::string describe(Complex z) {
  std::ostringstream s;
  s.precision(12);
  s << "(" << z.real() << ", " << z.imag() << ")";
  return s.str();
}

SolveReport solve_companion(const Problem& problem, double tol) {
  if (!(tol > 0.0))
    throw DomainError("tolerance must be positive");
  const ComplexMatrix m = translate_block(problem.companion);
  const double mnorm = frobenius_norm(m);
  const auto pairs = eigen_all(m, tol);

  SolveReport report;
  report.method = Method::eigenvector;
  for (const auto& p : pairs) {
    report.diagnostics.eigen.push_back({p.lambda, p.residual});
    if (p.deficient)
      report.diagnostics.warnings.push_back("eigenvalue " + describe(p.lambda) +
                                            " is repeated with a deficient eigenspace");
  }
  const auto reps = conjugate_representatives(pairs, mnorm, report.diagnostics);
  const std::size_t n = problem.companion.rows();
  if (reps.size() != n)
    report.diagnostics.warnings.push_back("found " + std::to_string(reps.size()) +
                                          " eigenvalue classes for degree " + std::to_string(n));

  std::vector<Root> found;
  for (const auto& rep : reps) {
    const auto phi = quaternionify_eigenvector(rep.vector);
    const auto [q, last] = extract_root(phi);
    Root root;
    root.q = q;
    root.lambda = rep.lambda;
    root.phi_last = last;
    root.residual = norm(problem.evaluate(q));
    root.lambda_check = problem.lambda_check(phi, rep.lambda);
    if (root.residual > problem.bound)
      throw VerificationError("root for eigenvalue " + describe(rep.lambda) + " has residual " +
                              std::to_string(root.residual) + " above bound " +
                              std::to_string(problem.bound));
    found.push_back(root);
  }

  // Group non-real representatives of the same similarity class.
  const double class_tol = 1e-8 * std::max(mnorm, 1.0);
  std::vector<bool> grouped(found.size(), false);
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (grouped[i])
      continue;
    grouped[i] = true;
    std::vector<std::size_t> group{i};
    const Complex li = found[i].lambda;
    if (li.imag() > 0.0)
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        const Complex lj = found[j].lambda;
        if (!grouped[j] && lj.imag() > 0.0 && std::abs(lj.real() - li.real()) <= class_tol &&
            std::abs(std::abs(lj) - std::abs(li)) <= class_tol) {
          grouped[j] = true;
          group.push_back(j);
        }
      }

    bool distinct = false;
    for (std::size_t g = 1; g < group.size(); ++g)
      if (norm(found[group[g]].q - found[i].q) > 1e-6)
        distinct = true;
    if (!distinct) {
      for (auto g : group)
        report.roots.push_back(found[g]);
      continue;
    }
    double re = 0.0;
    double imag = 0.0;
    for (auto g : group) {
      re += found[g].lambda.real();
      imag += found[g].lambda.imag();
    }
    re /= static_cast<double>(group.size());
    imag /= static_cast<double>(group.size());
    const std::size_t units = group.size() / 2;
    for (std::size_t u = 0; u < units; ++u)
      report.spheres.push_back({re, imag});
    Root representative = found[i];
    representative.kind = RootKind::spherical_representative;
    report.roots.push_back(representative);
    if (group.size() % 2 == 1)
      report.roots.push_back(found[group.back()]);
  }
  return report;
}

Problem unilateral_problem(const UnilateralPolynomial& poly, double tol) {
  return {build_companion(poly),
          [&poly](const Quaternion& q) { return evaluate(poly, q); },
          [](std::span<const Quaternion> phi, Complex l) { return check_lambda(phi, l); },
          residual_bound(poly, tol)};
}

UnilateralPolynomial as_unilateral(const BilateralQuadratic& bq) {
  return bilateral_to_unilateral(bq).poly;
}

}  // namespace

SolveReport solve_unilateral(const UnilateralPolynomial& poly, double tol) {
  if (!(tol > 0.0))
    throw DomainError("tolerance must be positive");
  if (poly.degree() == 1) {
    SolveReport report;
    const Quaternion a0 = poly[0];
    Root root;
    root.q = a0;
    root.lambda = Complex{a0.w, norm(a0.imag())};
    root.phi_last = Quaternion{1.0};
    root.residual = norm(evaluate(poly, a0));
    report.roots.push_back(root);
    return report;
  }
  return solve_companion(unilateral_problem(poly, tol), tol);
}

SolveReport solve_bilateral_direct(const BilateralQuadratic& bq, double tol) {
  const double bound = residual_bound(as_unilateral(bq), tol);
  Problem problem{build_generalized(bq),
                  [&bq](const Quaternion& p) { return evaluate_bilateral(bq, p); },
                  [&bq](std::span<const Quaternion> phi, Complex l) {
                    return check_lambda_bilateral(phi, bq.beta1, l);
                  },
                  bound};
  return solve_companion(problem, tol);
}

SolveReport solve_bilateral_reduced(const BilateralQuadratic& bq, double tol) {
  const auto reduced = bilateral_to_unilateral(bq);
  SolveReport report = solve_unilateral(reduced.poly, tol);
  // Sphere invariants stay those of q = p + beta1, matching the direct route
  // where they come from the eigenvalue class.
  for (auto& root : report.roots) {
    root.q = root.q - reduced.shift;
    root.residual = norm(evaluate_bilateral(bq, root.q));
  }
  return report;
}

double report_distance(const SolveReport& a, const SolveReport& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto isolated = [](const SolveReport& r) {
    std::vector<Quaternion> out;
    for (const auto& root : r.roots)
      if (root.kind == RootKind::isolated)
        out.push_back(root.q);
    return out;
  };
  const auto qa = isolated(a);
  auto qb = isolated(b);
  if (qa.size() != qb.size() || a.spheres.size() != b.spheres.size())
    return inf;
  double worst = 0.0;
  for (const auto& q : qa) {
    auto it = std::min_element(qb.begin(), qb.end(), [&](const Quaternion& x, const Quaternion& y) {
      return norm(x - q) < norm(y - q);
    });
    worst = std::max(worst, norm(*it - q));
    qb.erase(it);
  }
  std::vector<Sphere> sb = b.spheres;
  for (const auto& s : a.spheres) {
    auto dist = [&](const Sphere& t) { return std::hypot(t.re - s.re, t.imag_norm - s.imag_norm); };
    auto it = std::min_element(sb.begin(), sb.end(),
                               [&](const Sphere& x, const Sphere& y) { return dist(x) < dist(y); });
    worst = std::max(worst, dist(*it));
    sb.erase(it);
  }
  return worst;
}

SolveReport solve_bilateral(const BilateralQuadratic& bq, double tol) {
  SolveReport direct = solve_bilateral_direct(bq, tol);
  const SolveReport reduced = solve_bilateral_reduced(bq, tol);
  const double gap = report_distance(direct, reduced);
  const double limit = residual_bound(as_unilateral(bq), tol);
  if (!(gap <= limit))
    throw VerificationError("generalized-companion and reduction routes disagree by " +
                            std::to_string(gap));
  return direct;
}

}  // namespace qpoly

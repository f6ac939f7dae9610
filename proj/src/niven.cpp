#include "qpoly/niven.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace qpoly {

namespace {

void require_degree(const UnilateralPolynomial& poly) {
  if (poly.degree() < 2)
    throw DomainError("Niven factorization needs degree >= 2");
}

// Threshold below which d1 counts as zero; d1 scales like B^(n-1).
double d1_floor(const UnilateralPolynomial& poly) {
  return 1e-7 * std::pow(1.0 + poly.max_coeff_norm(), static_cast<double>(poly.degree() - 1));
}

Complex class_of(double c0, double c1) {
  const double re = 0.5 * c1;
  return {re, std::sqrt(std::max(0.0, -c0 - re * re))};
}

}  // namespace

NivenFactors step1(const UnilateralPolynomial& poly, double c0, double c1) {
  require_degree(poly);
  const std::size_t n = poly.degree();
  // ext[s] = b_s for s <= n-3, with b_{n-2} = -1 and b_{n-1} = 0 appended so
  // one recurrence covers every case.
  std::vector<Quaternion> ext(n);
  ext[n - 2] = Quaternion{-1.0};
  for (std::size_t s = n - 1; s >= 2; --s)
    ext[s - 2] = poly[s] + c1 * ext[s - 1] + c0 * ext[s];

  NivenFactors f;
  f.c0 = c0;
  f.c1 = c1;
  f.d1 = poly[1] + c1 * ext[0] + c0 * ext[1];
  f.d0 = poly[0] + c0 * ext[0];
  f.b.assign(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(n - 2));
  return f;
}

Quaternion evaluate_factorization(const NivenFactors& f, const Quaternion& q) {
  Quaternion power{1.0};
  Quaternion sum;
  for (const auto& b : f.b) {
    sum += b * power;
    power = power * q;
  }
  const Quaternion B = power - sum;
  const Quaternion C = q * q - f.c1 * q - Quaternion{f.c0};
  return B * C - (f.d1 * q + f.d0);
}

Quaternion root_from_d(const Quaternion& d0, const Quaternion& d1, double floor) {
  const double n2 = norm2(d1);
  if (n2 == 0.0 || std::sqrt(n2) <= floor)
    throw SphericalRootSignal("d1 vanishes: spherical zero family");
  return -(conj(d1) * d0) / n2;
}

Step2Residual step2_residual(const UnilateralPolynomial& poly, double c0, double c1) {
  const auto f = step1(poly, c0, c1);
  const double n1 = norm2(f.d1);
  return {c0 * n1 + norm2(f.d0), c1 * n1 + 2.0 * (conj(f.d1) * f.d0).w};
}

namespace {

struct Candidate {
  double c0;
  double c1;
};

// Damped Newton on (r1, r2) with a forward-difference Jacobian.
Candidate refine(const UnilateralPolynomial& poly, Candidate c) {
  auto eval = [&](double c0, double c1) {
    const auto r = step2_residual(poly, c0, c1);
    return std::array<double, 2>{r.r1, r.r2};
  };
  auto size = [](const std::array<double, 2>& r) { return std::hypot(r[0], r[1]); };

  auto r = eval(c.c0, c.c1);
  for (int it = 0; it < 200 && size(r) > 0.0; ++it) {
    const double h0 = 1e-7 * (1.0 + std::abs(c.c0));
    const double h1 = 1e-7 * (1.0 + std::abs(c.c1));
    const auto r_0 = eval(c.c0 + h0, c.c1);
    const auto r_1 = eval(c.c0, c.c1 + h1);
    const double j00 = (r_0[0] - r[0]) / h0, j01 = (r_1[0] - r[0]) / h1;
    const double j10 = (r_0[1] - r[1]) / h0, j11 = (r_1[1] - r[1]) / h1;
    const double det = j00 * j11 - j01 * j10;
    if (det == 0.0 || !std::isfinite(det))
      break;
    const double dc0 = -(j11 * r[0] - j01 * r[1]) / det;
    const double dc1 = -(-j10 * r[0] + j00 * r[1]) / det;
    double step = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
      const auto trial = eval(c.c0 + step * dc0, c.c1 + step * dc1);
      if (size(trial) < size(r)) {
        c = {c.c0 + step * dc0, c.c1 + step * dc1};
        r = trial;
        improved = true;
        break;
      }
    }
    if (!improved)
      break;
  }
  return c;
}

// Adds a root (or sphere) for a verified (c0, c1), grouping repeats of a class.
struct ClassOutcome {
  bool spherical = false;
  Quaternion q;
};

ClassOutcome outcome_for(const UnilateralPolynomial& poly, double c0, double c1) {
  const auto f = step1(poly, c0, c1);
  try {
    return {false, root_from_d(f.d0, f.d1, d1_floor(poly))};
  } catch (const SphericalRootSignal&) {
    const Complex cls = class_of(c0, c1);
    // a sphere of radius zero is the single real point c1/2
    if (cls.imag() <= 1e-6)
      return {false, Quaternion{cls.real()}};
    return {true, Quaternion{cls.real(), cls.imag()}};
  }
}

Root make_root(const UnilateralPolynomial& poly, const Quaternion& q, Complex cls, RootKind kind) {
  Root root;
  root.q = q;
  root.lambda = cls;
  root.residual = norm(evaluate(poly, q));
  root.kind = kind;
  root.lambda_check = std::hypot(q.w - cls.real(), norm(q.imag()) - cls.imag());
  return root;
}

}  // namespace

SolveReport solve_niven(const UnilateralPolynomial& poly, double tol) {
  require_degree(poly);
  if (!(tol > 0.0))
    throw DomainError("tolerance must be positive");
  const double B = 1.0 + poly.max_coeff_norm();
  constexpr int cells = 400;
  const double c1_lo = -2.0 * B, c1_hi = 2.0 * B;
  const double c0_lo = -B * B, c0_hi = 0.0;
  const double d1 = (c1_hi - c1_lo) / cells;
  const double d0 = (c0_hi - c0_lo) / cells;

  // one padding cell on each side so boundary roots (q = 0 sits at c0 = 0) are bracketed
  const int nodes = cells + 3;
  auto c0_at = [&](int i) { return c0_lo + (i - 1) * d0; };
  auto c1_at = [&](int j) { return c1_lo + (j - 1) * d1; };
  std::vector<Step2Residual> grid(static_cast<std::size_t>(nodes) * nodes);
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      grid[static_cast<std::size_t>(i) * nodes + j] = step2_residual(poly, c0_at(i), c1_at(j));

  std::vector<Candidate> seeds;
  for (int i = 0; i + 1 < nodes; ++i)
    for (int j = 0; j + 1 < nodes; ++j) {
      double lo1 = std::numeric_limits<double>::infinity(), hi1 = -lo1;
      double lo2 = lo1, hi2 = hi1;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj) {
          const auto& r = grid[static_cast<std::size_t>(i + di) * nodes + j + dj];
          lo1 = std::min(lo1, r.r1); hi1 = std::max(hi1, r.r1);
          lo2 = std::min(lo2, r.r2); hi2 = std::max(hi2, r.r2);
        }
      if (lo1 <= 0.0 && hi1 >= 0.0 && lo2 <= 0.0 && hi2 >= 0.0)
        seeds.push_back({c0_at(i) + 0.5 * d0, c1_at(j) + 0.5 * d1});
    }

  SolveReport report;
  report.method = Method::niven;
  if (seeds.empty()) {
    report.diagnostics.warnings.push_back("no sign-change cells found for the step-2 system");
    return report;
  }

  const double bound = residual_bound(poly, tol);
  struct Refined {
    Candidate c;
    double size;
  };
  std::vector<Refined> refined;
  refined.reserve(seeds.size());
  for (const auto& seed : seeds) {
    const Candidate c = refine(poly, seed);
    const auto r = step2_residual(poly, c.c0, c.c1);
    double size = std::hypot(r.r1, r.r2);
    const auto outcome = outcome_for(poly, c.c0, c.c1);
    if (!outcome.spherical)
      size = std::min(size, norm(evaluate(poly, outcome.q)));
    refined.push_back({c, size});
  }
  // Best candidates first; near a multiple root the residual surface is flat, so
  // refinements stall anywhere within about sqrt(bound) of the true class.
  std::stable_sort(refined.begin(), refined.end(),
                   [](const Refined& a, const Refined& b) { return a.size < b.size; });
  const double merge = std::max(1e-6, 10.0 * std::sqrt(bound));

  std::vector<Candidate> accepted;
  std::vector<Quaternion> accepted_q;
  for (const auto& [c, size] : refined) {
    // Two candidates are the same zero if the residual stays within the bound on
    // the segment between them (a multiple root smears into such a valley).
    const bool duplicate = std::any_of(accepted.begin(), accepted.end(), [&](const Candidate& a) {
      if (std::hypot(a.c0 - c.c0, a.c1 - c.c1) <= merge)
        return true;
      for (double t : {0.25, 0.5, 0.75}) {
        const auto r = step2_residual(poly, a.c0 + t * (c.c0 - a.c0), a.c1 + t * (c.c1 - a.c1));
        if (std::hypot(r.r1, r.r2) > bound)
          return false;
      }
      return true;
    });
    if (duplicate)
      continue;
    const auto outcome = outcome_for(poly, c.c0, c.c1);
    const Complex cls = class_of(c.c0, c.c1);
    if (outcome.spherical) {
      const auto r = step2_residual(poly, c.c0, c.c1);
      if (std::hypot(r.r1, r.r2) > bound)
        continue;
      accepted.push_back(c);
      accepted_q.push_back(outcome.q);
      report.spheres.push_back({cls.real(), cls.imag()});
      // i * imag_norm lies on the sphere
      report.roots.push_back(make_root(poly, outcome.q, cls, RootKind::spherical_representative));
      continue;
    }
    Root root = make_root(poly, outcome.q, cls, RootKind::isolated);
    if (root.residual > bound)
      continue;
    const bool near = std::any_of(accepted_q.begin(), accepted_q.end(), [&](const Quaternion& q) {
      if (norm(q - outcome.q) <= merge)
        return true;
      for (double t : {0.25, 0.5, 0.75})
        if (norm(evaluate(poly, q + t * (outcome.q - q))) > bound)
          return false;
      return true;
    });
    if (near)
      continue;
    accepted.push_back(c);
    accepted_q.push_back(outcome.q);
    report.roots.push_back(root);
  }
  if (report.roots.empty())
    report.diagnostics.warnings.push_back("no step-2 candidate refined to a verified root");
  return report;
}

SolveReport solve_spv(const UnilateralPolynomial& poly, double tol) {
  require_degree(poly);
  if (!(tol > 0.0))
    throw DomainError("tolerance must be positive");
  const ComplexMatrix m = translate_block(build_companion(poly));
  const auto pairs = eigen_all(m, tol);

  SolveReport report;
  report.method = Method::spv;
  for (const auto& p : pairs)
    report.diagnostics.eigen.push_back({p.lambda, p.residual});
  const auto reps = conjugate_representatives(pairs, frobenius_norm(m), report.diagnostics);
  const double bound = residual_bound(poly, tol);
  const double class_tol = 1e-8 * std::max(frobenius_norm(m), 1.0);

  std::vector<Complex> sphere_classes;
  std::vector<int> sphere_hits;
  for (const auto& rep : reps) {
    const double c0 = -std::norm(rep.lambda);
    const double c1 = 2.0 * rep.lambda.real();
    const auto f = step1(poly, c0, c1);
    try {
      const Quaternion q = root_from_d(f.d0, f.d1, d1_floor(poly));
      Root root = make_root(poly, q, rep.lambda, RootKind::isolated);
      if (root.residual > bound)
        throw VerificationError("SPV root has residual " + std::to_string(root.residual) +
                                " above bound " + std::to_string(bound));
      report.roots.push_back(root);
    } catch (const SphericalRootSignal&) {
      report.diagnostics.warnings.push_back("d1 = 0 at (c0, c1) = (" + std::to_string(c0) + ", " +
                                            std::to_string(c1) + "): spherical zero family");
      auto it = std::find_if(sphere_classes.begin(), sphere_classes.end(), [&](Complex s) {
        return std::abs(s - rep.lambda) <= class_tol;
      });
      if (it == sphere_classes.end()) {
        sphere_classes.push_back(rep.lambda);
        sphere_hits.push_back(1);
      } else {
        ++sphere_hits[static_cast<std::size_t>(it - sphere_classes.begin())];
      }
    }
  }
  for (std::size_t s = 0; s < sphere_classes.size(); ++s) {
    const Complex cls = sphere_classes[s];
    const int units = std::max(1, sphere_hits[s] / 2);
    for (int u = 0; u < units; ++u)
      report.spheres.push_back({cls.real(), cls.imag()});
    report.roots.push_back(make_root(poly, Quaternion::from_complex(cls), cls,
                                     RootKind::spherical_representative));
  }
  return report;
}

}  // namespace qpoly

#include "qpoly/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace qpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(Complex z) {
  return std::abs(z.real()) + std::abs(z.imag());
}

// G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
struct Givens {
  double c = 1.0;
  Complex s{};

  static Givens make(Complex a, Complex b) {
    const double na = std::abs(a);
    const double nb = std::abs(b);
    if (nb == 0.0)
      return {};
    if (na == 0.0)
      return {0.0, std::conj(b) / nb};
    const double r = std::hypot(na, nb);
    return {na / r, (a / na) * std::conj(b) / r};
  }

  // Rows i, i+1 of h, columns [c0, c1].
  void apply_left(ComplexMatrix& h, std::size_t i, std::size_t c0, std::size_t c1) const {
    for (std::size_t col = c0; col <= c1; ++col) {
      const Complex x = h(i, col);
      const Complex y = h(i + 1, col);
      h(i, col) = c * x + s * y;
      h(i + 1, col) = -std::conj(s) * x + c * y;
    }
  }

  // Columns i, i+1 of h times G^H, rows [r0, r1].
  void apply_right_adjoint(ComplexMatrix& h, std::size_t i, std::size_t r0, std::size_t r1) const {
    for (std::size_t row = r0; row <= r1; ++row) {
      const Complex x = h(row, i);
      const Complex y = h(row, i + 1);
      h(row, i) = x * c + y * std::conj(s);
      h(row, i + 1) = -x * s + y * c;
    }
  }
};

// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry.
Complex wilkinson_shift(const ComplexMatrix& h, std::size_t iu) {
  Complex a = h(iu - 1, iu - 1);
  Complex b = h(iu - 1, iu);
  Complex c = h(iu, iu - 1);
  Complex d = h(iu, iu);
  const double scale = abs1(a) + abs1(b) + abs1(c) + abs1(d);
  if (scale == 0.0)
    return 0.0;
  a /= scale; b /= scale; c /= scale; d /= scale;
  const Complex bc = b * c;
  const Complex diff = a - d;
  const Complex disc = std::sqrt(diff * diff + 4.0 * bc);
  const Complex det = a * d - bc;
  Complex e1 = (a + d + disc) / 2.0;
  Complex e2 = (a + d - disc) / 2.0;
  // recompute the smaller root from the product to avoid cancellation
  if (abs1(e1) > abs1(e2))
    e2 = det / e1;
  else if (abs1(e2) != 0.0)
    e1 = det / e2;
  return scale * (abs1(e1 - d) < abs1(e2 - d) ? e1 : e2);
}

// LU with partial pivoting of a shifted matrix, for repeated solves.
class ShiftedLU {
public:
  ShiftedLU(const ComplexMatrix& m, Complex shift, double pivot_floor)
      : n_{m.rows()}, lu_{m}, perm_(m.rows()) {
    for (std::size_t r = 0; r < n_; ++r)
      lu_(r, r) -= shift;
    for (std::size_t r = 0; r < n_; ++r)
      perm_[r] = r;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t piv = k;
      for (std::size_t r = k + 1; r < n_; ++r)
        if (std::abs(lu_(r, k)) > std::abs(lu_(piv, k)))
          piv = r;
      if (piv != k) {
        for (std::size_t c = 0; c < n_; ++c)
          std::swap(lu_(k, c), lu_(piv, c));
        std::swap(perm_[k], perm_[piv]);
      }
      if (std::abs(lu_(k, k)) < pivot_floor)
        lu_(k, k) = pivot_floor;
      for (std::size_t r = k + 1; r < n_; ++r) {
        const Complex f = lu_(r, k) / lu_(k, k);
        lu_(r, k) = f;
        for (std::size_t c = k + 1; c < n_; ++c)
          lu_(r, c) -= f * lu_(k, c);
      }
    }
  }

  std::vector<Complex> solve(std::span<const Complex> b) const {
    std::vector<Complex> x(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      Complex acc = b[perm_[r]];
      for (std::size_t c = 0; c < r; ++c)
        acc -= lu_(r, c) * x[c];
      x[r] = acc;
    }
    for (std::size_t r = n_; r-- > 0;) {
      Complex acc = x[r];
      for (std::size_t c = r + 1; c < n_; ++c)
        acc -= lu_(r, c) * x[c];
      x[r] = acc / lu_(r, r);
    }
    return x;
  }

private:
  std::size_t n_;
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
};

Complex dot(std::span<const Complex> u, std::span<const Complex> v) {
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += std::conj(u[i]) * v[i];
  return acc;
}

// Two passes of classical Gram-Schmidt against an orthonormal set.
void orthogonalize(std::vector<Complex>& x, std::span<const std::vector<Complex>> basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) {
      const Complex p = dot(b, x);
      for (std::size_t i = 0; i < x.size(); ++i)
        x[i] -= p * b[i];
    }
}

bool normalize(std::vector<Complex>& x) {
  const double nx = norm2(x);
  if (nx == 0.0 || !std::isfinite(nx))
    return false;
  for (auto& e : x)
    e /= nx;
  return true;
}

double residual_of(const ComplexMatrix& m, Complex lambda, std::span<const Complex> v) {
  auto mv = apply(m, v);
  for (std::size_t i = 0; i < mv.size(); ++i)
    mv[i] -= lambda * v[i];
  return norm2(mv);
}

// Start vectors in order: (1, ..., 1)/sqrt(dim), then e_0, e_1, ... Each is
// projected off span(exclude); ones that nearly vanish there are skipped.
std::vector<std::vector<Complex>> start_vectors(std::size_t dim,
                                                std::span<const std::vector<Complex>> exclude) {
  std::vector<std::vector<Complex>> out;
  std::vector<Complex> ones(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim))});
  orthogonalize(ones, exclude);
  if (norm2(ones) > 1e-3 && normalize(ones))
    out.push_back(std::move(ones));
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Complex> e(dim);
    e[k] = 1.0;
    orthogonalize(e, exclude);
    if (norm2(e) > 1e-3 && normalize(e))
      out.push_back(std::move(e));
  }
  return out;
}

std::vector<Complex> qr_eigenvalues(ComplexMatrix h, double deflate_tol) {
  const std::size_t n = h.rows();
  if (n == 0)
    return {};
  const double hnorm = frobenius_norm(h);
  auto negligible = [&](std::size_t i) {
    const double scale = std::abs(h(i, i)) + std::abs(h(i + 1, i + 1));
    const double ref = scale == 0.0 ? hnorm : scale;
    return std::abs(h(i + 1, i)) <= deflate_tol * ref;
  };

  const std::size_t max_iter = 30 * n;
  std::size_t iu = n - 1;
  std::size_t iter = 0;
  std::size_t total = 0;
  while (true) {
    while (iu > 0 && negligible(iu - 1)) {
      h(iu, iu - 1) = 0.0;
      iter = 0;
      --iu;
    }
    if (iu == 0)
      break;
    ++iter;
    if (++total > max_iter) {
      std::vector<Complex> partial;
      for (std::size_t r = iu + 1; r < n; ++r)
        partial.push_back(h(r, r));
      throw ConvergenceError("QR iteration did not converge within 30*dim sweeps",
                             std::move(partial));
    }
    std::size_t il = iu - 1;
    while (il > 0 && !negligible(il - 1))
      --il;

    Complex shift;
    if ((iter == 10 || iter == 20) && iu >= 2)
      shift = std::abs(h(iu, iu - 1).real()) + std::abs(h(iu - 1, iu - 2).real());
    else
      shift = wilkinson_shift(h, iu);

    auto g = Givens::make(h(il, il) - shift, h(il + 1, il));
    g.apply_left(h, il, il, iu);
    g.apply_right_adjoint(h, il, il, std::min(il + 2, iu));
    for (std::size_t i = il + 1; i < iu; ++i) {
      g = Givens::make(h(i, i - 1), h(i + 1, i - 1));
      g.apply_left(h, i, i - 1, iu);
      h(i + 1, i - 1) = 0.0;
      g.apply_right_adjoint(h, i, il, std::min(i + 2, iu));
    }
  }
  std::vector<Complex> out(n);
  for (std::size_t r = 0; r < n; ++r)
    out[r] = h(r, r);
  return out;
}

}  // namespace

HessenbergForm hessenberg(const ComplexMatrix& m) {
  if (!m.is_square())
    throw DimensionError("hessenberg needs a square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix h = m;
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    std::vector<Complex> v(len);
    double xnorm = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = h(k + 1 + i, k);
      xnorm += std::norm(v[i]);
    }
    xnorm = std::sqrt(xnorm);
    double tail = 0.0;
    for (std::size_t i = 1; i < len; ++i)
      tail += std::norm(v[i]);
    if (tail == 0.0)
      continue;
    const Complex phase = std::abs(v[0]) == 0.0 ? Complex{1.0} : v[0] / std::abs(v[0]);
    const Complex alpha = -phase * xnorm;
    v[0] -= alpha;
    if (!normalize(v))
      continue;
    // h <- (I - 2 v v^H) h
    for (std::size_t c = 0; c < n; ++c) {
      Complex s{};
      for (std::size_t i = 0; i < len; ++i)
        s += std::conj(v[i]) * h(k + 1 + i, c);
      for (std::size_t i = 0; i < len; ++i)
        h(k + 1 + i, c) -= 2.0 * v[i] * s;
    }
    // h <- h (I - 2 v v^H), q <- q (I - 2 v v^H)
    for (ComplexMatrix* target : {&h, &q})
      for (std::size_t r = 0; r < n; ++r) {
        Complex s{};
        for (std::size_t i = 0; i < len; ++i)
          s += (*target)(r, k + 1 + i) * v[i];
        for (std::size_t i = 0; i < len; ++i)
          (*target)(r, k + 1 + i) -= 2.0 * s * std::conj(v[i]);
      }
    h(k + 1, k) = alpha;
    for (std::size_t i = 1; i < len; ++i)
      h(k + 1 + i, k) = 0.0;
  }
  return {std::move(h), std::move(q)};
}

ComplexMatrix balance(const ComplexMatrix& m) {
  if (!m.is_square())
    throw DimensionError("balance needs a square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix b = m;
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i)
          continue;
        c += abs1(b(j, i));
        r += abs1(b(i, j));
      }
      if (c == 0.0 || r == 0.0)
        continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        for (std::size_t j = 0; j < n; ++j)
          b(i, j) /= f;
        for (std::size_t j = 0; j < n; ++j)
          b(j, i) *= f;
      }
    }
  }
  return b;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m, double tol) {
  if (!m.is_square())
    throw DimensionError("eigenvalues need a square matrix");
  if (!(tol > 0.0))
    throw DomainError("tolerance must be positive");
  const double mnorm = frobenius_norm(m);
  auto values = qr_eigenvalues(hessenberg(balance(m)).H, std::min(tol, kEps));
  for (auto& v : values)
    if (std::abs(v.imag()) <= 1e-9 * mnorm)
      v = Complex{v.real(), 0.0};
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return values;
}

std::vector<Complex> eigenvector_for(const ComplexMatrix& m, Complex lambda, double tol,
                                     std::span<const std::vector<Complex>> exclude) {
  if (!m.is_square())
    throw DimensionError("eigenvector_for needs a square matrix");
  const std::size_t dim = m.rows();
  const double mnorm = frobenius_norm(m);
  const double scale = mnorm > 0.0 ? mnorm : 1.0;
  const double bound = tol * scale;
  const ShiftedLU lu(m, lambda + 1e-10 * scale, kEps * scale);

  // An exact-arithmetic start can have no component along the wanted vector
  // (integer matrices, orthogonalised starts); later starts cover that case.
  for (auto x : start_vectors(dim, exclude)) {
    std::optional<std::vector<Complex>> best;
    double best_res = std::numeric_limits<double>::infinity();
    double prev_res = std::numeric_limits<double>::infinity();
    for (int step = 0; step < 50; ++step) {
      auto y = lu.solve(x);
      orthogonalize(y, exclude);
      if (!normalize(y))
        break;
      const double res = residual_of(m, lambda, y);
      if (res < best_res) {
        best_res = res;
        best = y;
      }
      x = std::move(y);
      if (res == 0.0 || (step >= 1 && res <= bound && res > 0.5 * prev_res))
        break;
      prev_res = res;
    }
    if (best && best_res <= bound)
      return *best;
  }
  throw ConvergenceError("inverse iteration stagnated above the residual bound");
}

std::vector<Eigenpair> eigen_all(const ComplexMatrix& m, double tol) {
  const auto values = eigenvalues(m, tol);
  const double mnorm = frobenius_norm(m);
  const double cluster_radius = 1e-5 * std::max(mnorm, 1.0);

  std::vector<Eigenpair> out;
  out.reserve(values.size());
  for (const Complex lambda : values) {
    std::vector<std::vector<Complex>> cluster;
    for (const auto& prev : out)
      if (std::abs(prev.lambda - lambda) <= cluster_radius && !prev.deficient)
        cluster.push_back(prev.vector);

    Eigenpair pair{lambda, {}, 0.0, false};
    std::optional<std::vector<Complex>> plain;
    try {
      plain = eigenvector_for(m, lambda, tol);
    } catch (const ConvergenceError&) {
      if (cluster.empty())
        throw;
    }
    bool parallel = !plain;
    if (plain)
      for (const auto& v : cluster)
        if (std::abs(dot(v, *plain)) >= 1.0 - 1e-6)
          parallel = true;

    if (!parallel) {
      pair.vector = std::move(*plain);
    } else {
      // orthonormal basis of what the cluster has found so far
      std::vector<std::vector<Complex>> basis;
      for (auto v : cluster) {
        orthogonalize(v, basis);
        if (normalize(v))
          basis.push_back(std::move(v));
      }
      try {
        pair.vector = eigenvector_for(m, lambda, tol, basis);
      } catch (const ConvergenceError&) {
        pair.vector = plain ? std::move(*plain) : cluster.front();
        pair.deficient = true;
      }
    }
    pair.residual = residual_of(m, lambda, pair.vector);
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace qpoly

#include "lics/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "lics/polynomial.hpp"

namespace lics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool eig_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<cplx> quadratic_eigenvalues(const CMatrix& m) {
  const cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const cplx mean = 0.5 * (a + d);
  const cplx half_diff = 0.5 * (a - d);
  const cplx s = std::sqrt(half_diff * half_diff + b * c);
  // Take the root that avoids cancellation, then recover the other from the determinant.
  const cplx big = (std::real(std::conj(mean) * s) >= 0.0) ? mean + s : mean - s;
  const cplx det = a * d - b * c;
  const cplx small = (big == cplx{}) ? cplx{} : det / big;
  return {big, small};
}

struct NullSpace {
  std::array<std::array<cplx, kMaxDim>, kMaxDim> vecs{};
  std::size_t count = 0;
};

// Gaussian elimination with complete pivoting on A, stopped after `rank`
// pivots; every non-pivot column yields one null-space vector by
// back-substitution.
NullSpace forced_rank_nullspace(CMatrix a, std::size_t rank) {
  const std::size_t n = a.dim();
  std::array<std::size_t, kMaxDim> col{};
  std::iota(col.begin(), col.begin() + n, 0);

  for (std::size_t k = 0; k < rank; ++k) {
    std::size_t pr = k, pc = k;
    double best = -1.0;
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = k; c < n; ++c) {
        const double v = std::abs(a(r, col[c]));
        if (v > best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr != k)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pr, c), a(k, c));
    std::swap(col[k], col[pc]);
    const cplx piv = a(k, col[k]);
    if (piv == cplx{}) continue;
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = a(r, col[k]) / piv;
      if (f == cplx{}) continue;
      for (std::size_t c = k; c < n; ++c) a(r, col[c]) -= f * a(k, col[c]);
    }
  }

  NullSpace ns;
  for (std::size_t free = rank; free < n; ++free) {
    auto& x = ns.vecs[ns.count++];
    x.fill(0.0);
    x[col[free]] = 1.0;
    for (std::size_t k = rank; k-- > 0;) {
      cplx s = 0.0;
      for (std::size_t c = k + 1; c < n; ++c) s += a(k, col[c]) * x[col[c]];
      const cplx piv = a(k, col[k]);
      x[col[k]] = (piv == cplx{}) ? cplx{} : -s / piv;
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(x[i]);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) x[i] /= nrm;
  }
  return ns;
}

double residual(const CMatrix& m, cplx lambda, std::span<const cplx> x) {
  std::array<cplx, kMaxDim> y{};
  m.apply(x, std::span<cplx>(y.data(), m.dim()));
  double r = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) r = std::max(r, std::abs(y[i] - lambda * x[i]));
  return r;
}

cplx rayleigh(const CMatrix& m, std::span<const cplx> x) {
  std::array<cplx, kMaxDim> y{};
  m.apply(x, std::span<cplx>(y.data(), m.dim()));
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    num += std::conj(x[i]) * y[i];
    den += std::norm(x[i]);
  }
  return num / den;
}

CMatrix shifted(const CMatrix& m, cplx lambda) {
  CMatrix a = m;
  for (std::size_t i = 0; i < m.dim(); ++i) a(i, i) -= lambda;
  return a;
}

std::vector<cplx> raw_eigenvalues(const CMatrix& m) {
  switch (m.dim()) {
    case 1: return {m(0, 0)};
    case 2: return quadratic_eigenvalues(m);
    default: {
      const auto coeffs = characteristic_polynomial(m);
      return poly_roots(coeffs);
    }
  }
}

}  // namespace

EigenSystem eigensystem(const CMatrix& m) {
  const std::size_t n = m.dim();
  const double scale = std::max(m.max_abs(), std::numeric_limits<double>::min());
  std::vector<cplx> vals = raw_eigenvalues(m);
  std::sort(vals.begin(), vals.end(), eig_less);

  EigenSystem es;
  es.vectors = CMatrix(n);
  const double cluster_tol = 1e-7 * scale;
  const double accept_tol = 1e3 * kEps * scale * static_cast<double>(n);

  std::size_t k = 0;
  while (k < n) {
    // Group eigenvalues closer than cluster_tol to the first of the group.
    std::size_t end = k + 1;
    while (end < n && std::abs(vals[end] - vals[k]) <= cluster_tol) ++end;
    const std::size_t mult = end - k;

    if (mult == 1) {
      cplx lambda = vals[k];
      auto ns = forced_rank_nullspace(shifted(m, lambda), n - 1);
      std::span<const cplx> x(ns.vecs[0].data(), n);
      double res = residual(m, lambda, x);
      for (int it = 0; it < 2; ++it) {
        const cplx cand = rayleigh(m, x);
        auto ns2 = forced_rank_nullspace(shifted(m, cand), n - 1);
        const double res2 = residual(m, cand, std::span<const cplx>(ns2.vecs[0].data(), n));
        if (!(res2 < res)) break;
        lambda = cand;
        ns = ns2;
        res = res2;
      }
      vals[k] = lambda;
      for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = ns.vecs[0][i];
      if (!(res <= accept_tol)) es.degenerate = true;
    } else {
      cplx mean = 0.0;
      for (std::size_t j = k; j < end; ++j) mean += vals[j];
      mean /= static_cast<double>(mult);
      const auto ns = forced_rank_nullspace(shifted(m, mean), n - mult);
      for (std::size_t j = 0; j < mult; ++j) {
        std::span<const cplx> x(ns.vecs[j].data(), n);
        // Polynomial roots of a repeated eigenvalue are only good to about
        // sqrt(eps); the Rayleigh quotient of the null vector is much sharper.
        const cplx lambda = rayleigh(m, x);
        if (!(residual(m, lambda, x) <= accept_tol)) es.degenerate = true;
        vals[k + j] = lambda;
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k + j) = ns.vecs[j][i];
      }
    }
    k = end;
  }

  // Refinement may have nudged the order; keep vectors attached to their values.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return eig_less(vals[a], vals[b]); });
  EigenSystem sorted;
  sorted.degenerate = es.degenerate;
  sorted.vectors = CMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted.values.push_back(vals[order[j]]);
    for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, j) = es.vectors(i, order[j]);
  }
  if (!sorted.degenerate && !std::isfinite(condition1(sorted.vectors))) sorted.degenerate = true;
  return sorted;
}

std::vector<cplx> eigenvalues(const CMatrix& m) { return eigensystem(m).values; }

}  // namespace lics

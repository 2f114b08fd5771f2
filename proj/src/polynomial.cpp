#include "lics/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lics/errors.hpp"

namespace lics {

cplx poly_eval(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double poly_magnitude(std::span<const cplx> coeffs, cplx z) {
  const double az = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * az + std::abs(*it);
  return acc;
}

namespace {

// p(z) and p'(z) together.
std::pair<cplx, cplx> eval_with_derivative(std::span<const cplx> c, cplx z) {
  cplx p = 0.0;
  cplx dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

std::vector<cplx> poly_roots(std::span<const cplx> coeffs, double rel_tol) {
  if (coeffs.size() < 2) throw UsageError("poly_roots: degree must be at least 1");
  const std::size_t deg = coeffs.size() - 1;
  if (coeffs[deg] == cplx{}) throw UsageError("poly_roots: leading coefficient is zero");

  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  for (auto& v : c) v /= coeffs[deg];

  if (deg == 1) return {-c[0]};

  // Cauchy bound on root moduli for the starting circle.
  double radius = 0.0;
  for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1.0 + radius;
  // Start around the centroid -c[deg-1]/deg, on a circle of radius bounded by
  // the geometric mean of the roots' distance. The 0.4 offset breaks symmetry.
  const cplx centre = -c[deg - 1] / static_cast<double>(deg);
  const double r0 = std::max(std::pow(std::abs(poly_eval(c, centre)), 1.0 / static_cast<double>(deg)),
                             std::numeric_limits<double>::min());
  const double start_r = std::min(r0, radius);
  std::vector<cplx> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
    z[k] = centre + std::polar(start_r, ang);
  }

  constexpr int kMaxIter = 500;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(deg, false);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < deg; ++k) {
      if (done[k]) continue;
      const auto [p, dp] = eval_with_derivative(c, z[k]);
      if (std::abs(p) <= 4.0 * kEps * poly_magnitude(c, z[k])) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const cplx newton = p / dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const cplx denom = 1.0 - newton * sum;
      const cplx step = (denom == cplx{}) ? newton : newton / denom;
      z[k] -= step;
      if (std::abs(step) <= kEps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }

  // Newton polish, keeping a step only when it reduces |p|.
  for (auto& root : z) {
    for (int it = 0; it < 8; ++it) {
      const auto [p, dp] = eval_with_derivative(c, root);
      if (std::abs(p) <= rel_tol * 1e-3 * poly_magnitude(c, root) || dp == cplx{}) break;
      const cplx cand = root - p / dp;
      if (std::abs(poly_eval(c, cand)) >= std::abs(p)) break;
      root = cand;
    }
  }
  return z;
}

std::vector<cplx> characteristic_polynomial(const CMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<cplx> coeff(n + 1);
  coeff[n] = 1.0;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  CMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    CMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[n - k + 1];
    mk = next;
    const CMatrix amk = m * mk;
    cplx tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    coeff[n - k] = -tr / static_cast<double>(k);
  }
  return coeff;
}

}  // namespace lics

#include "lics/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lics/errors.hpp"

namespace lics {

namespace {

void check_dim(std::size_t n) {
  if (n == 0 || n > kMaxDim) throw UsageError("CMatrix dimension must be 1.." + std::to_string(kMaxDim));
}

void check_same(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw UsageError("CMatrix dimension mismatch");
}

}  // namespace

CMatrix::CMatrix(std::size_t n) : n_(n) { check_dim(n); }

CMatrix::CMatrix(std::size_t n, std::initializer_list<cplx> row_major) : CMatrix(n) {
  if (row_major.size() != n * n) throw UsageError("CMatrix initializer needs n*n entries");
  auto it = row_major.begin();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) (*this)(r, c) = *it++;
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

double CMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m = std::max(m, std::abs((*this)(r, c)));
  return m;
}

double CMatrix::norm1() const noexcept {
  double m = 0.0;
  for (std::size_t c = 0; c < n_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n_; ++r) s += std::abs((*this)(r, c));
    m = std::max(m, s);
  }
  return m;
}

double CMatrix::frobenius() const noexcept {
  double s = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) s += std::norm((*this)(r, c));
  return std::sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  check_same(*this, o);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) += o(r, c);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  check_same(*this, o);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) -= o(r, c);
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) noexcept {
  for (auto& v : a_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.dim();
  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

void CMatrix::apply(std::span<const cplx> x, std::span<cplx> y) const {
  if (x.size() != n_ || y.size() != n_) throw UsageError("CMatrix::apply: vector length mismatch");
  for (std::size_t r = 0; r < n_; ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
}

bool CMatrix::operator==(const CMatrix& o) const noexcept {
  if (n_ != o.n_) return false;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != o(r, c)) return false;
  return true;
}

CMatrix inverse(const CMatrix& m) {
  const std::size_t n = m.dim();
  CMatrix a = m;
  CMatrix inv = CMatrix::identity(n);
  const double scale = m.max_abs();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= std::numeric_limits<double>::epsilon() * scale * 1e-3 || scale == 0.0)
      throw UsageError("inverse: matrix is singular");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const cplx d = 1.0 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= d;
      inv(col, c) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

double condition1(const CMatrix& m) {
  try {
    return m.norm1() * inverse(m).norm1();
  } catch (const UsageError&) {
    return std::numeric_limits<double>::infinity();
  }
}

double symmetry_defect(const CMatrix& m) { return (m - m.transpose()).max_abs(); }

}  // namespace lics

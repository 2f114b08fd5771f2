#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace lics {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDim = 4;

/// Small dense complex matrix (dimension 1..4) stored inline, row major.
///
/// Every Hamiltonian and basis transform in the library is a CMatrix. The
/// dimension is fixed at construction; arithmetic between matrices of
/// different dimension throws UsageError.
class CMatrix {
 public:
  explicit CMatrix(std::size_t n);
  CMatrix(std::size_t n, std::initializer_list<cplx> row_major);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> d);

  std::size_t dim() const noexcept { return n_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * kMaxDim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * kMaxDim + c]; }

  CMatrix transpose() const;
  CMatrix adjoint() const;

  /// Largest entry modulus.
  double max_abs() const noexcept;
  /// Maximum absolute column sum.
  double norm1() const noexcept;
  double frobenius() const noexcept;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s) noexcept;

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  /// y = A x; x.size() must equal dim().
  void apply(std::span<const cplx> x, std::span<cplx> y) const;

  bool operator==(const CMatrix& o) const noexcept;

 private:
  std::size_t n_;
  std::array<cplx, kMaxDim * kMaxDim> a_{};
};

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// UsageError if the matrix is numerically singular.
CMatrix inverse(const CMatrix& m);

/// 1-norm condition number ‖M‖₁‖M⁻¹‖₁, +inf when singular.
double condition1(const CMatrix& m);

/// max-abs of M - Mᵀ (plain transpose, not conjugate).
double symmetry_defect(const CMatrix& m);

}  // namespace lics

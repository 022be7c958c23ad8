#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "witting/eisenstein.hpp"

namespace witting {

using Vec4 = std::array<Eisenstein, 4>;

/// Hermitian product sum_k conj(u_k) v_k.
Eisenstein inner(const Vec4& u, const Vec4& v);
Rational norm_sq(const Vec4& v);
Vec4 conj(const Vec4& v);
Vec4 scale(const Eisenstein& s, const Vec4& v);
bool is_zero(const Vec4& v);

/// Dense 4x4 matrix over Q(w), row-major.
class Matrix4 {
 public:
  Matrix4() = default;
  /// Row-major initializer; must have exactly 16 entries.
  Matrix4(std::initializer_list<Eisenstein> entries);

  static Matrix4 identity();
  static Matrix4 diagonal(const Vec4& d);
  /// Matrix whose k-th column is cols[k].
  static Matrix4 from_columns(const std::array<Vec4, 4>& cols);

  Eisenstein& operator()(int r, int c) { return e_[r * 4 + c]; }
  const Eisenstein& operator()(int r, int c) const { return e_[r * 4 + c]; }
  std::span<const Eisenstein, 16> entries() const { return e_; }

  Vec4 column(int c) const;
  Vec4 row(int r) const;

  Matrix4 transpose() const;
  Matrix4 conj() const;
  /// Conjugate transpose.
  Matrix4 adjoint() const;
  Eisenstein trace() const;
  Eisenstein det() const;
  /// Throws std::domain_error for singular input.
  Matrix4 inverse() const;

  bool is_identity() const { return *this == identity(); }
  bool is_unitary() const;

  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y);
  friend Vec4 operator*(const Matrix4& m, const Vec4& v);
  friend Matrix4 operator*(const Eisenstein& s, const Matrix4& m);
  friend Matrix4 operator+(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator-(const Matrix4& x, const Matrix4& y);
  Matrix4 operator-() const { return Eisenstein(-1) * *this; }

  friend bool operator==(const Matrix4&, const Matrix4&) = default;

  std::size_t hash() const;

 private:
  std::array<Eisenstein, 16> e_{};
};

/// Rank of a list of 4-vectors by exact Gaussian elimination.
int rank(std::span<const Vec4> rows);

}  // namespace witting

template <>
struct std::hash<witting::Matrix4> {
  std::size_t operator()(const witting::Matrix4& m) const noexcept { return m.hash(); }
};

#include "witting/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace witting {

Eisenstein inner(const Vec4& u, const Vec4& v) {
  Eisenstein s;
  for (int k = 0; k < 4; ++k) {
    if (!u[k].is_zero() && !v[k].is_zero()) s += u[k].conj() * v[k];
  }
  return s;
}

Rational norm_sq(const Vec4& v) {
  Rational s;
  for (const auto& x : v) s += x.modulus_sq();
  return s;
}

Vec4 conj(const Vec4& v) { return {v[0].conj(), v[1].conj(), v[2].conj(), v[3].conj()}; }

Vec4 scale(const Eisenstein& s, const Vec4& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }

bool is_zero(const Vec4& v) {
  return std::all_of(v.begin(), v.end(), [](const Eisenstein& x) { return x.is_zero(); });
}

Matrix4::Matrix4(std::initializer_list<Eisenstein> entries) {
  if (entries.size() != 16) throw std::invalid_argument("Matrix4 needs 16 entries");
  std::copy(entries.begin(), entries.end(), e_.begin());
}

Matrix4 Matrix4::identity() { return diagonal({1, 1, 1, 1}); }

Matrix4 Matrix4::diagonal(const Vec4& d) {
  Matrix4 m;
  for (int k = 0; k < 4; ++k) m(k, k) = d[k];
  return m;
}

Matrix4 Matrix4::from_columns(const std::array<Vec4, 4>& cols) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = cols[c][r];
  return m;
}

Vec4 Matrix4::column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c), (*this)(3, c)}; }
Vec4 Matrix4::row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2), (*this)(r, 3)}; }

Matrix4 Matrix4::transpose() const {
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix4 Matrix4::conj() const {
  Matrix4 m;
  for (int k = 0; k < 16; ++k) m.e_[k] = e_[k].conj();
  return m;
}

Matrix4 Matrix4::adjoint() const { return transpose().conj(); }

Eisenstein Matrix4::trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

Eisenstein Matrix4::det() const {
  Matrix4 m = *this;
  Eisenstein d(1);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && m(piv, col).is_zero()) ++piv;
    if (piv == 4) return {};
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(m(piv, c), m(col, c));
      d = -d;
    }
    d *= m(col, col);
    Eisenstein inv = m(col, col).inverse();
    for (int r = col + 1; r < 4; ++r) {
      if (m(r, col).is_zero()) continue;
      Eisenstein f = m(r, col) * inv;
      for (int c = col; c < 4; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

Matrix4 Matrix4::inverse() const {
  Matrix4 a = *this;
  Matrix4 inv = identity();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && a(piv, col).is_zero()) ++piv;
    if (piv == 4) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (int c = 0; c < 4; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    Eisenstein p = a(col, col).inverse();
    for (int c = 0; c < 4; ++c) {
      a(col, c) *= p;
      inv(col, c) *= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Eisenstein f = a(r, col);
      for (int c = 0; c < 4; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

bool Matrix4::is_unitary() const { return (*this * adjoint()).is_identity(); }

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      const Eisenstein& xrk = x(r, k);
      if (xrk.is_zero()) continue;
      for (int c = 0; c < 4; ++c) {
        const Eisenstein& ykc = y(k, c);
        if (!ykc.is_zero()) m(r, c) += xrk * ykc;
      }
    }
  }
  return m;
}

Vec4 operator*(const Matrix4& m, const Vec4& v) {
  Vec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k)
      if (!m(r, k).is_zero() && !v[k].is_zero()) out[r] += m(r, k) * v[k];
  return out;
}

Matrix4 operator*(const Eisenstein& s, const Matrix4& m) {
  Matrix4 out;
  for (int k = 0; k < 16; ++k) out.e_[k] = s * m.e_[k];
  return out;
}

Matrix4 operator+(const Matrix4& x, const Matrix4& y) {
  Matrix4 out;
  for (int k = 0; k < 16; ++k) out.e_[k] = x.e_[k] + y.e_[k];
  return out;
}

Matrix4 operator-(const Matrix4& x, const Matrix4& y) {
  Matrix4 out;
  for (int k = 0; k < 16; ++k) out.e_[k] = x.e_[k] - y.e_[k];
  return out;
}

std::size_t Matrix4::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : e_) {
    for (std::int64_t v : {x.a().num(), x.a().den(), x.b().num(), x.b().den()}) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
  }
  return static_cast<std::size_t>(h);
}

int rank(std::span<const Vec4> rows) {
  std::vector<Vec4> m(rows.begin(), rows.end());
  int r = 0;
  for (int col = 0; col < 4 && r < static_cast<int>(m.size()); ++col) {
    int piv = r;
    while (piv < static_cast<int>(m.size()) && m[piv][col].is_zero()) ++piv;
    if (piv == static_cast<int>(m.size())) continue;
    std::swap(m[piv], m[r]);
    Eisenstein inv = m[r][col].inverse();
    for (int i = r + 1; i < static_cast<int>(m.size()); ++i) {
      if (m[i][col].is_zero()) continue;
      Eisenstein f = m[i][col] * inv;
      for (int c = col; c < 4; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

}  // namespace witting

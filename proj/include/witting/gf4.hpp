#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "witting/rays.hpp"

namespace witting::gf4 {

/// Element of the four-element field {0, 1, w, wb}, wb = w^2.
class GF4 {
 public:
  constexpr GF4() = default;
  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 w() { return GF4(2); }
  static constexpr GF4 wb() { return GF4(3); }
  static constexpr GF4 from_code(std::uint8_t code) { return GF4(code & 3u); }
  static std::array<GF4, 4> all() { return {zero(), one(), w(), wb()}; }

  constexpr std::uint8_t code() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend GF4 operator+(GF4 x, GF4 y);
  friend GF4 operator*(GF4 x, GF4 y);
  GF4 operator-() const { return *this; }
  /// Galois conjugation a -> a^2.
  GF4 conj() const { return *this * *this; }
  GF4 inverse() const;

  friend constexpr bool operator==(GF4, GF4) = default;
  std::string str() const;

 private:
  explicit constexpr GF4(std::uint8_t v) : v_(v) {}
  std::uint8_t v_ = 0;
};

GF4 gf4_add(GF4 x, GF4 y);
GF4 gf4_mul(GF4 x, GF4 y);
GF4 gf4_conj(GF4 x);

using Vec = std::array<GF4, 4>;

/// Point of PG(3,4): nonzero vector scaled so the first nonzero entry is 1.
struct PG34Point {
  Vec coords{};
  friend bool operator==(const PG34Point&, const PG34Point&) = default;
  std::string str() const;
};

PG34Point canonical_point(const Vec& v);

/// Drops signs: 0 -> 0, +-1 -> 1, +-w -> w, +-wb -> wb.  Throws
/// std::invalid_argument for any other coordinate.
PG34Point reduce_ray(const Ray& r);
/// Reductions of all 40 configuration rays, in (l, n) order.
std::vector<PG34Point> reduced_points();

/// sum_k p_k conj(q_k) == 0.
bool hermitian_orthogonal(const PG34Point& p, const PG34Point& q);

/// Row-major 4x4 matrix over F4.
using Mat = std::array<GF4, 16>;

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
GF4 det(const Mat& m);
std::string mat_str(const Mat& m);

/// The four published generators of U_4(2).
std::vector<Mat> gf4_generators();

/// Projective closure: matrices are identified up to the three nonzero
/// scalars.  Elements are returned packed 2 bits per entry, canonical scale.
std::vector<std::uint32_t> projective_closure(const std::vector<Mat>& gens, std::size_t cap);
std::uint32_t pack(const Mat& m);
Mat unpack(std::uint32_t code);

/// Unordered orthogonal pairs (i < j) of the reduced points.
std::vector<std::pair<int, int>> orthogonality_edges(const std::vector<PG34Point>& pts);

}  // namespace witting::gf4

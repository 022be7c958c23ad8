#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "witting/matrix.hpp"

namespace witting {

/// Table position of a configuration ray: column l (0..3), row n (0..9).
struct RayIndex {
  int l = 0;
  int n = 0;

  /// Position in (l, n) lexicographic order, 0..39.
  constexpr int flat() const { return 10 * l + n; }
  static constexpr RayIndex from_flat(int i) { return {i / 10, i % 10}; }
  /// Two-digit label "ln", matching the usual phi^l_n shorthand.
  std::string label() const { return std::to_string(l) + std::to_string(n); }

  friend constexpr bool operator==(const RayIndex&, const RayIndex&) = default;
  friend constexpr auto operator<=>(const RayIndex&, const RayIndex&) = default;
};

/// A projective point of CP^3 stored as an unnormalized vector whose first
/// nonzero coordinate is 1.
class Ray {
 public:
  /// Canonicalizes `v`; throws std::invalid_argument for the zero vector.
  explicit Ray(const Vec4& v, std::optional<RayIndex> index = std::nullopt);

  const Vec4& coords() const { return coords_; }
  const Rational& norm_sq() const { return norm_sq_; }
  const std::optional<RayIndex>& index() const { return index_; }

  /// Ray equality is projective: tags are ignored.
  friend bool operator==(const Ray& x, const Ray& y) { return x.coords_ == y.coords_; }

 private:
  Vec4 coords_;
  Rational norm_sq_;
  std::optional<RayIndex> index_;
};

/// Scales v so its first nonzero coordinate is 1.  Throws for v = 0.
Vec4 canonical_coords(const Vec4& v);
Ray canonicalize(const Vec4& v);

struct Vec4Hash {
  std::size_t operator()(const Vec4& v) const noexcept;
};

/// The 40 rays in (l, n) order, indices attached.  Column 3 is built from
/// the (mu, nu) exponent pattern of its rows; columns 0..2 follow from it by
/// cyclic coordinate shifts with a fixed sign pattern per column.
std::vector<Ray> generate_rays();

/// The same 40 rays enumerated directly from the four closed-form
/// families (0,1,-w^m,w^n), (1,0,-w^m,-w^n), (1,-w^m,0,w^n), (1,w^m,w^n,0)
/// plus the coordinate axes.  Untagged, family order.
std::vector<Vec4> closed_form_rays();

struct PolytopeVertex {
  Vec4 coords;
  int ray = -1;  ///< flat index of the projective class
};

/// The 240 vertices of the complex Witting polytope.
std::vector<PolytopeVertex> generate_polytope_vertices();

/// Immutable, lazily built view of the configuration with index lookup.
class Configuration {
 public:
  static const Configuration& get();

  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(int flat) const { return rays_.at(flat); }
  const Ray& ray(int l, int n) const { return rays_.at(RayIndex{l, n}.flat()); }
  std::size_t size() const { return rays_.size(); }

  /// Flat index of the ray through v (any nonzero multiple), if any.
  std::optional<int> find(const Vec4& v) const;

  /// Orthogonality as a 40x40 lookup.
  bool orthogonal(int i, int j) const { return orth_[i][j]; }

 private:
  Configuration();

  std::vector<Ray> rays_;
  std::unordered_map<Vec4, int, Vec4Hash> lookup_;
  std::vector<std::vector<bool>> orth_;
};

Eisenstein inner_product(const Ray& u, const Ray& v);
/// |<u|v>|^2 / (|u|^2 |v|^2).
Rational overlap_sq(const Ray& u, const Ray& v);
/// Number of other configuration rays orthogonal to u.
int orthogonality_degree(const Ray& u);

/// Text rendering of the ray table, one row per n, columns l = 0..3.
std::string render_ray_table(const std::vector<Ray>& rays);

}  // namespace witting

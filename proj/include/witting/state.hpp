#pragma once

#include <array>

#include "witting/matrix.hpp"

namespace witting {

/// Two ququarts: amplitude of |j>|k> stored at 4*j + k.  Amplitudes are kept
/// unnormalized; norm_sq is carried alongside and Born probabilities divide
/// by it at the end.
class BipartiteState {
 public:
  /// Throws std::invalid_argument for the zero vector.
  explicit BipartiteState(const std::array<Eisenstein, 16>& amplitudes);
  static BipartiteState product(const Vec4& first, const Vec4& second);
  static BipartiteState from_matrix(const Matrix4& coefficients);

  const std::array<Eisenstein, 16>& amplitudes() const { return amps_; }
  const Eisenstein& amplitude(int j, int k) const { return amps_[4 * j + k]; }
  const Rational& norm_sq() const { return norm_sq_; }
  Matrix4 coefficient_matrix() const;

  /// (A (x) B) applied to the state.
  BipartiteState apply(const Matrix4& a, const Matrix4& b) const;

  /// Unnormalized state of the other side after projecting `side` (1 or 2)
  /// onto phi.
  Vec4 conditional_partner(int side, const Vec4& phi) const;

  friend bool operator==(const BipartiteState&, const BipartiteState&) = default;

 private:
  std::array<Eisenstein, 16> amps_;
  Rational norm_sq_;
};

}  // namespace witting

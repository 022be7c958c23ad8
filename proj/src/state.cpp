#include "witting/state.hpp"

#include <stdexcept>

namespace witting {

BipartiteState::BipartiteState(const std::array<Eisenstein, 16>& amplitudes) : amps_(amplitudes) {
  for (const auto& a : amps_) norm_sq_ += a.modulus_sq();
  if (norm_sq_.is_zero()) throw std::invalid_argument("zero bipartite state");
}

BipartiteState BipartiteState::product(const Vec4& first, const Vec4& second) {
  std::array<Eisenstein, 16> a{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) a[4 * j + k] = first[j] * second[k];
  return BipartiteState(a);
}

BipartiteState BipartiteState::from_matrix(const Matrix4& coefficients) {
  std::array<Eisenstein, 16> a{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) a[4 * j + k] = coefficients(j, k);
  return BipartiteState(a);
}

Matrix4 BipartiteState::coefficient_matrix() const {
  Matrix4 m;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m(j, k) = amps_[4 * j + k];
  return m;
}

BipartiteState BipartiteState::apply(const Matrix4& a, const Matrix4& b) const {
  // Coefficient matrix transforms as C -> A C B^T.
  return from_matrix(a * coefficient_matrix() * b.transpose());
}

Vec4 BipartiteState::conditional_partner(int side, const Vec4& phi) const {
  Vec4 out{};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      if (side == 1) {
        out[k] += phi[j].conj() * amps_[4 * j + k];
      } else if (side == 2) {
        out[j] += phi[k].conj() * amps_[4 * j + k];
      } else {
        throw std::invalid_argument("side must be 1 or 2");
      }
    }
  }
  return out;
}

}  // namespace witting

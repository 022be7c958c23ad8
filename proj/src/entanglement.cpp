#include "witting/entanglement.hpp"

#include <algorithm>
#include <stdexcept>

#include "witting/contextuality.hpp"

namespace witting {

EntangledState entangled_state(const JMatrix& j) {
  BipartiteState st = BipartiteState::from_matrix(j.matrix);  // throws on zero
  Rational tr = (j.matrix * j.matrix.adjoint()).trace().a();
  return {j, st, tr.inverse()};
}

Invariance check_invariance(const GroupElement& a, const JMatrix& j, InvarianceMode mode) {
  Matrix4 img = a * j.matrix * a.transpose();
  if (img == j.matrix) return Invariance::invariant;
  if (mode == InvarianceMode::signed_ && img == -j.matrix) return Invariance::anti_invariant;
  return Invariance::neither;
}

GroupElement partner_transform(const GroupElement& a, const JMatrix& j) {
  Matrix4 jt = j.matrix.transpose();
  return jt * a.conj() * jt.inverse();
}

Ray j_opposite(const Ray& r, const JMatrix& j) { return Ray(j.matrix * conj(r.coords())); }

int j_opposite_index(int flat, const JMatrix& j) {
  const auto& cfg = Configuration::get();
  auto idx = cfg.find(j.matrix * conj(cfg.ray(flat).coords()));
  if (!idx) throw std::logic_error(j.label() + "-opposite of a configuration ray is outside the configuration");
  return *idx;
}

std::vector<int> opposite_table(const JMatrix& j) {
  std::vector<int> opp(40);
  for (int i = 0; i < 40; ++i) opp[i] = j_opposite_index(i, j);
  for (int i = 0; i < 40; ++i) {
    if (opp[opp[i]] != i) throw std::logic_error(j.label() + "-opposite map is not an involution");
  }
  return opp;
}

BasisPairing opposite_basis_pairing(const JMatrix& j) {
  const auto opp = opposite_table(j);
  BasisPairing out;
  for (const auto& b : enumerate_bases()) {
    std::array<int, 4> img{};
    for (int k = 0; k < 4; ++k) img[k] = opp[b.members[k]];
    auto id = find_basis(img);
    if (!id) throw std::logic_error("opposite image of basis " + std::to_string(b.id) + " is not a basis");
    out.partner.push_back(*id);
    if (*id == b.id) out.fixed.push_back(b.id);
  }
  return out;
}

std::vector<ConjugatedJ> scan_conjugate_j(const std::vector<GroupElement>& coset_reps, const JMatrix& base) {
  const JMatrix named[] = {j_a(), j_1(), j_2()};
  std::vector<ConjugatedJ> out;
  for (const auto& s : coset_reps) {
    ConjugatedJ c{s, s * base.matrix * s.transpose(), false, std::nullopt};
    c.unit_entries = std::all_of(c.j_s.entries().begin(), c.j_s.entries().end(), [](const Eisenstein& x) {
      return x.is_zero() || x == Eisenstein(1) || x == Eisenstein(-1);
    });
    for (const auto& n : named) {
      if (c.j_s == n.matrix || c.j_s == -n.matrix) c.matches = n.name;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace witting

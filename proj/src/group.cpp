#include "witting/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "witting/jmatrix.hpp"

namespace witting {

namespace {

constexpr std::size_t kWittingOrder = 51840;

// -i conj(w)/sqrt(3) = -(2w+1) conj(w) / 3
Eisenstein triflection_prefactor() {
  return Eisenstein(Rational(-1, 3)) * Eisenstein::i_sqrt3() * Eisenstein::omega_bar();
}

}  // namespace

std::string canonical_key(const GroupElement& g) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r || c) out += ';';
      out += g(r, c).str();
    }
  }
  return out;
}

// --- ElementSet ------------------------------------------------------------

std::size_t ElementSet::probe(const GroupElement& g, std::size_t h) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = h & mask;; i = (i + 1) & mask) {
    std::uint32_t s = slots_[i];
    if (s == 0) return i;
    if (hashes_[s - 1] == h && elements_[s - 1] == g) return i;
  }
}

std::optional<std::size_t> ElementSet::index_of(const GroupElement& g) const {
  if (slots_.empty()) return std::nullopt;
  std::uint32_t s = slots_[probe(g, g.hash())];
  if (s == 0) return std::nullopt;
  return s - 1;
}

void ElementSet::reserve(std::size_t n) {
  elements_.reserve(n);
  hashes_.reserve(n);
  std::size_t want = 16;
  while (want < 2 * n) want <<= 1;
  if (want <= slots_.size()) return;
  slots_.assign(want, 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    slots_[probe(elements_[i], hashes_[i])] = static_cast<std::uint32_t>(i + 1);
  }
}

void ElementSet::grow() { reserve(std::max<std::size_t>(16, elements_.size() * 2)); }

bool ElementSet::insert(GroupElement g) {
  if (2 * (elements_.size() + 1) > slots_.size()) grow();
  std::size_t h = g.hash();
  std::size_t slot = probe(g, h);
  if (slots_[slot] != 0) return false;
  elements_.push_back(std::move(g));
  hashes_.push_back(h);
  slots_[slot] = static_cast<std::uint32_t>(elements_.size());
  return true;
}

// --- MatrixGroup -----------------------------------------------------------

MatrixGroup MatrixGroup::closure(std::vector<GroupElement> generators, std::size_t cap) {
  MatrixGroup g;
  g.generators_ = std::move(generators);
  g.set_.insert(GroupElement::identity());
  for (std::size_t i = 0; i < g.set_.size(); ++i) {
    for (const auto& s : g.generators_) {
      GroupElement p = s * g.set_[i];
      if (g.set_.insert(std::move(p)) && g.set_.size() > cap) {
        throw ClosureCapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return g;
}

MatrixGroup MatrixGroup::from_elements(std::vector<GroupElement> elements,
                                       std::vector<GroupElement> generators) {
  MatrixGroup g;
  g.set_.reserve(elements.size());
  for (auto& e : elements) g.set_.insert(std::move(e));
  g.generators_ = std::move(generators);
  return g;
}

// --- generators ------------------------------------------------------------

GroupElement generator_R(int k) {
  const Eisenstein w = Eisenstein::omega(), wb = Eisenstein::omega_bar();
  const Eisenstein c = Eisenstein::i_sqrt3() * w;  // i w sqrt(3)
  switch (k) {
    case 1: return Matrix4::diagonal({w, 1, 1, 1});
    case 2:
      return triflection_prefactor() * Matrix4{wb, 1, 1, 0,
                                               1, wb, 1, 0,
                                               1, 1, wb, 0,
                                               0, 0, 0, c};
    case 3: return Matrix4::diagonal({1, 1, w, 1});
    case 4:
      return triflection_prefactor() * Matrix4{c, 0, 0, 0,
                                               0, wb, -1, 1,
                                               0, -1, wb, -1,
                                               0, 1, -1, wb};
    default: throw std::out_of_range("generator index must be 1..4");
  }
}

GroupElement generator_r(int k) { return Eisenstein::omega_bar() * generator_R(k); }

GroupElement reflection(const Vec4& phi, const Eisenstein& zeta) {
  if (!zeta.as_unit()) throw std::invalid_argument("reflection: zeta must be a root of unity +-w^k");
  if (is_zero(phi)) throw std::invalid_argument("reflection: zero vector");
  const Eisenstein f = (zeta - Eisenstein(1)) * Eisenstein(norm_sq(phi).inverse());
  GroupElement m = GroupElement::identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) += f * phi[i] * phi[j].conj();
  return m;
}

GroupElement reflection(const Ray& phi, const Eisenstein& zeta) { return reflection(phi.coords(), zeta); }

std::vector<GroupElement> signed_permutation_generators() {
  return {
      Matrix4{-1, 0, 0, 0,
              0, 0, -1, 0,
              0, -1, 0, 0,
              0, 0, 0, 1},
      Matrix4{0, -1, 0, 0,
              -1, 0, 0, 0,
              0, 0, -1, 0,
              0, 0, 0, 1},
      Matrix4{1, 0, 0, 0,
              0, 0, 0, -1,
              0, 0, -1, 0,
              0, -1, 0, 0},
  };
}

// --- groups ----------------------------------------------------------------

const MatrixGroup& witting_group() {
  static const MatrixGroup w = [] {
    std::vector<GroupElement> gens;
    for (int k = 1; k <= 4; ++k) gens.push_back(generator_r(k));
    return MatrixGroup::closure(std::move(gens), kWittingOrder);
  }();
  return w;
}

MatrixGroup full_symmetry_group() {
  std::vector<GroupElement> gens;
  for (int k = 1; k <= 4; ++k) gens.push_back(generator_R(k));
  return MatrixGroup::closure(std::move(gens), 3 * kWittingOrder);
}

std::vector<GroupElement> center(const MatrixGroup& g) {
  std::vector<GroupElement> out;
  for (const auto& x : g.elements()) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const GroupElement& s) { return s * x == x * s; });
    if (central) out.push_back(x);
  }
  return out;
}

MatrixGroup diagonal_subgroup() {
  const Eisenstein w = Eisenstein::omega(), wb = Eisenstein::omega_bar();
  return MatrixGroup::closure({Matrix4::diagonal({w, wb, 1, 1}), Matrix4::diagonal({1, w, wb, 1}),
                               Matrix4::diagonal({1, 1, w, wb})},
                              kWittingOrder);
}

MatrixGroup signed_permutation_subgroup() {
  return MatrixGroup::closure(signed_permutation_generators(), kWittingOrder);
}

MatrixGroup subgroup_WB() {
  return MatrixGroup::closure(
      {generator_r(1) * generator_r(3),
       generator_r(3) * generator_r(2) * generator_r(1) * generator_r(4), j_a().matrix},
      kWittingOrder);
}

MatrixGroup subgroup_WH() {
  return MatrixGroup::closure({generator_r(1) * generator_r(3), generator_r(2) * generator_r(4).adjoint()},
                              kWittingOrder);
}

MatrixGroup subgroup_W2H() {
  return MatrixGroup::closure(
      {generator_r(1) * generator_r(3), generator_r(2) * generator_r(4).adjoint(), j_2().matrix},
      kWittingOrder);
}

std::vector<NamedSubgroup> special_subgroups() {
  std::vector<NamedSubgroup> out;
  out.push_back({"diagonal", 27, diagonal_subgroup()});
  out.push_back({"signed_permutation", 48, signed_permutation_subgroup()});
  out.push_back({"W_B", 1920, subgroup_WB()});
  out.push_back({"W_H", 720, subgroup_WH()});
  out.push_back({"W_2H", 1440, subgroup_W2H()});
  for (const auto& s : out) {
    if (s.group.order() != s.expected_order) {
      throw std::logic_error("subgroup " + s.name + " has order " + std::to_string(s.group.order()) +
                             ", expected " + std::to_string(s.expected_order));
    }
  }
  return out;
}

MatrixGroup conjugate_subgroup(const GroupElement& s, const MatrixGroup& h) {
  const GroupElement s_inv = s.inverse();
  std::vector<GroupElement> elems;
  elems.reserve(h.order());
  for (const auto& x : h.elements()) elems.push_back(s * x * s_inv);
  std::vector<GroupElement> gens;
  for (const auto& x : h.generators()) gens.push_back(s * x * s_inv);
  return MatrixGroup::from_elements(std::move(elems), std::move(gens));
}

std::vector<GroupElement> coset_representatives(const MatrixGroup& g, const MatrixGroup& h) {
  std::vector<bool> covered(g.order(), false);
  std::vector<GroupElement> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    reps.push_back(g[i]);
    for (const auto& x : h.elements()) {
      auto idx = g.index_of(g[i] * x);
      if (!idx) throw std::logic_error("coset_representatives: H is not a subgroup of G");
      covered[*idx] = true;
    }
  }
  return reps;
}

MatrixGroup normal_closure(const std::vector<GroupElement>& group_gens, const GroupElement& x) {
  std::vector<GroupElement> gens{x};
  MatrixGroup n = MatrixGroup::closure(gens, kWittingOrder * 3);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const auto& t : group_gens) {
        GroupElement c = t * gens[i] * t.inverse();
        if (!n.contains(c)) {
          gens.push_back(c);
          n = MatrixGroup::closure(gens, kWittingOrder * 3);
          changed = true;
        }
      }
    }
  }
  return n;
}

std::vector<int> conjugacy_classes(const MatrixGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<GroupElement> invs;
  for (const auto& t : g.generators()) invs.push_back(t.inverse());
  int next = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    std::deque<std::size_t> queue{i};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < invs.size(); ++k) {
        auto idx = g.index_of(g.generators()[k] * g[cur] * invs[k]);
        if (!idx) throw std::logic_error("conjugacy_classes: group not closed");
        if (cls[*idx] < 0) {
          cls[*idx] = next;
          queue.push_back(*idx);
        }
      }
    }
    ++next;
  }
  return cls;
}

// --- action ----------------------------------------------------------------

Ray act_on_ray(const GroupElement& g, const Ray& r) { return Ray(g * r.coords()); }

std::vector<int> ray_permutation(const GroupElement& g) {
  const auto& cfg = Configuration::get();
  std::vector<int> perm(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    auto idx = cfg.find(g * cfg.ray(static_cast<int>(i)).coords());
    if (!idx) throw std::logic_error("group element moves a ray outside the configuration");
    perm[i] = *idx;
  }
  return perm;
}

std::vector<std::vector<int>> set_orbit(const std::vector<std::vector<int>>& perms, std::vector<int> start) {
  std::sort(start.begin(), start.end());
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> orbit{start};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& p : perms) {
      std::vector<int> img;
      img.reserve(orbit[i].size());
      for (int v : orbit[i]) img.push_back(p[v]);
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) orbit.push_back(std::move(img));
    }
  }
  return orbit;
}

std::array<int, 4> column_rays(const GroupElement& g) {
  const auto& cfg = Configuration::get();
  std::array<int, 4> out{};
  for (int c = 0; c < 4; ++c) {
    auto idx = cfg.find(g.column(c));
    if (!idx) throw std::logic_error("column outside the configuration");
    out[c] = *idx;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace witting

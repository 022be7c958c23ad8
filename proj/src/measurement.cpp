#include "witting/measurement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "witting/rays.hpp"

namespace witting {

Rational OutcomeDistribution::total() const {
  Rational t;
  for (const auto& e : entries) t += e.probability;
  return t;
}

namespace {

int phase_rank(const Eisenstein& u) {
  static const Eisenstein order[] = {Eisenstein(1),  Eisenstein::omega(),  Eisenstein::omega_bar(),
                                     Eisenstein(-1), -Eisenstein::omega(), -Eisenstein::omega_bar()};
  for (int i = 0; i < 6; ++i)
    if (order[i] == u) return i;
  throw std::logic_error("column phase is not a sixth root of unity");
}

struct Candidate {
  std::array<int, 4> ranks{};
  std::string key;
  const GroupElement* element = nullptr;
};

std::array<GroupElement, 40> compute_basis_unitaries() {
  const auto& cfg = Configuration::get();
  const Eisenstein third_root = Eisenstein::i_sqrt3() * Eisenstein(Rational(1, 3));
  std::array<Candidate, 40> best;
  for (const auto& g : witting_group().elements()) {
    std::array<int, 4> cols{};
    for (int k = 0; k < 4; ++k) {
      auto idx = cfg.find(g.column(k));
      if (!idx) throw std::logic_error("group element maps the axis outside the configuration");
      cols[k] = *idx;
    }
    if (!std::is_sorted(cols.begin(), cols.end())) continue;
    auto id = find_basis(cols);
    if (!id) continue;
    Candidate c;
    c.element = &g;
    for (int k = 0; k < 4; ++k) {
      const Ray& r = cfg.ray(cols[k]);
      const auto& coords = r.coords();
      int lead = 0;
      while (coords[lead].is_zero()) ++lead;
      Eisenstein scale = g.column(k)[lead];
      if (r.norm_sq() != Rational(1)) scale = scale / third_root;
      c.ranks[k] = phase_rank(scale);
    }
    Candidate& cur = best[*id - 1];
    if (cur.element != nullptr && c.ranks > cur.ranks) continue;
    if (cur.element != nullptr && c.ranks == cur.ranks) {
      c.key = canonical_key(g);
      if (cur.key.empty()) cur.key = canonical_key(*cur.element);
      if (c.key >= cur.key) continue;
    }
    cur = std::move(c);
  }
  std::array<GroupElement, 40> out;
  for (int i = 0; i < 40; ++i) {
    if (best[i].element == nullptr) throw std::logic_error("no unitary for basis " + std::to_string(i + 1));
    out[i] = *best[i].element;
  }
  return out;
}

}  // namespace

const GroupElement& basis_unitary(int basis_id) {
  static const std::array<GroupElement, 40> table = compute_basis_unitaries();
  if (basis_id < 1 || basis_id > 40) throw std::out_of_range("basis id must be in 1..40");
  return table[basis_id - 1];
}

OutcomeDistribution PairMeasurement::distribution() const {
  const auto& cfg = Configuration::get();
  OutcomeDistribution d;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      d.entries.push_back({"phi" + cfg.ray(rays1[i]).index()->label() + ",phi" + cfg.ray(rays2[k]).index()->label(),
                           prob[i][k]});
    }
  return d;
}

PairMeasurement measure_pair(const BipartiteState& state, int basis1, int basis2) {
  const auto& bases = enumerate_bases();
  if (basis1 < 1 || basis1 > 40 || basis2 < 1 || basis2 > 40) throw std::out_of_range("basis id must be in 1..40");
  const auto& cfg = Configuration::get();
  PairMeasurement m;
  m.basis1 = basis1;
  m.basis2 = basis2;
  m.rays1 = bases[basis1 - 1].members;
  m.rays2 = bases[basis2 - 1].members;
  for (int i = 0; i < 4; ++i) {
    const Ray& a = cfg.ray(m.rays1[i]);
    Vec4 partner = state.conditional_partner(1, a.coords());
    for (int k = 0; k < 4; ++k) {
      const Ray& b = cfg.ray(m.rays2[k]);
      Eisenstein amp = inner(b.coords(), partner);
      m.prob[i][k] = amp.modulus_sq() / (a.norm_sq() * b.norm_sq() * state.norm_sq());
    }
  }
  return m;
}

Matrix8 cm_operator(const Vec4& phi) {
  Rational n = norm_sq(phi);
  if (n.is_zero()) throw std::invalid_argument("cm_operator needs a nonzero vector");
  Matrix8 m;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      Eisenstein p = phi[s] * phi[t].conj() * Eisenstein(n.inverse());
      Eisenstein id = s == t ? Eisenstein(1) : Eisenstein(0);
      // (1 - P) on a == a', P on a != a'
      for (int a = 0; a < 2; ++a) {
        m(2 * s + a, 2 * t + a) = id - p;
        m(2 * s + a, 2 * t + (1 - a)) = p;
      }
    }
  return m;
}

Matrix8 toffoli() {
  Matrix8 m;
  for (int i = 0; i < 8; ++i) m(i, i) = Eisenstein(1);
  m(6, 6) = m(7, 7) = Eisenstein(0);
  m(6, 7) = m(7, 6) = Eisenstein(1);
  return m;
}

bool is_unitary(const Matrix8& m) {
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      Eisenstein s;
      for (int k = 0; k < 8; ++k) s += m(r, k) * m(c, k).conj();
      if (s != Eisenstein(r == c ? 1 : 0)) return false;
    }
  return true;
}

std::vector<SequenceBranch> contextual_sequence(const BipartiteState& state, int side,
                                                const std::vector<Vec4>& phis) {
  if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (norm_sq(phis[i]).is_zero()) throw std::invalid_argument("zero vector in sequence");
    for (std::size_t j = i + 1; j < phis.size(); ++j)
      if (!inner(phis[i], phis[j]).is_zero())
        throw std::invalid_argument("sequence vectors must be pairwise orthogonal");
  }
  std::vector<SequenceBranch> branches{{{}, state.amplitudes(), Rational(1)}};
  for (const auto& phi : phis) {
    const Matrix8 cm = cm_operator(phi);
    std::vector<SequenceBranch> next;
    for (const auto& br : branches) {
      // out[a][j][k]: ancilla starts in |0>, so only column a' = 0 contributes.
      std::array<std::array<Eisenstein, 16>, 2> out{};
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          const Eisenstein& amp = br.amplitudes[4 * j + k];
          if (amp.is_zero()) continue;
          int s = side == 1 ? j : k;
          for (int t = 0; t < 4; ++t)
            for (int a = 0; a < 2; ++a) {
              const Eisenstein& c = cm(2 * t + a, 2 * s);
              if (c.is_zero()) continue;
              int jj = side == 1 ? t : j;
              int kk = side == 1 ? k : t;
              out[a][4 * jj + kk] += c * amp;
            }
        }
      for (int a = 0; a < 2; ++a) {
        Rational w;
        for (const auto& x : out[a]) w += x.modulus_sq();
        if (w.is_zero()) continue;
        SequenceBranch nb{br.ancilla, out[a], w / state.norm_sq()};
        nb.ancilla.push_back(a);
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
  }
  return branches;
}

SampleResult sample_outcomes(const OutcomeDistribution& dist, std::uint64_t seed, std::uint64_t n) {
  if (dist.entries.empty()) throw std::invalid_argument("empty distribution");
  if (!dist.normalized()) throw std::invalid_argument("distribution does not sum to 1");
  std::int64_t lcd = 1;
  for (const auto& e : dist.entries) {
    if (e.probability.sign() < 0) throw std::invalid_argument("negative probability");
    lcd = std::lcm(lcd, e.probability.den());
  }
  std::vector<std::uint64_t> cumulative;
  std::uint64_t acc = 0;
  for (const auto& e : dist.entries) {
    acc += static_cast<std::uint64_t>((e.probability * Rational(lcd)).num());
    cumulative.push_back(acc);
  }
  const auto bound = static_cast<std::uint64_t>(lcd);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::mt19937_64 rng(seed);
  SampleResult res{"mt19937_64/rejection-mod-lcd", seed, std::vector<std::uint64_t>(dist.entries.size(), 0)};
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    std::uint64_t r = x % bound;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    ++res.counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return res;
}

}  // namespace witting

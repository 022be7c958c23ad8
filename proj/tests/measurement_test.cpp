#include <cmath>

#include "doctest.h"
#include "witting/entanglement.hpp"
#include "witting/golden.hpp"
#include "witting/measurement.hpp"

using namespace witting;

namespace {

const Ray& phi(int l, int n) { return Configuration::get().ray(l, n); }

}  // namespace

TEST_SUITE("measurement-sim") {
  TEST_CASE("bipartite state") {
    BipartiteState p = BipartiteState::product(Vec4{1, 0, 0, 0}, Vec4{0, 1, 1, 0});
    CHECK(p.norm_sq() == Rational(2));
    CHECK(p.amplitude(0, 1) == Eisenstein(1));
    CHECK(BipartiteState::from_matrix(p.coefficient_matrix()) == p);
    CHECK_THROWS(BipartiteState(std::array<Eisenstein, 16>{}));
    CHECK(p.conditional_partner(1, Vec4{1, 0, 0, 0}) == Vec4{0, 1, 1, 0});
    CHECK(p.conditional_partner(2, Vec4{0, 1, 0, 0}) == Vec4{1, 0, 0, 0});
    CHECK_THROWS(p.conditional_partner(3, Vec4{1, 0, 0, 0}));
  }

  TEST_CASE("basis unitaries") {
    CHECK(basis_unitary(4).is_identity());
    const auto& w = witting_group();
    for (const auto& b : enumerate_bases()) {
      const auto& u = basis_unitary(b.id);
      CHECK(w.contains(u));
      for (int k = 0; k < 4; ++k) CHECK(Configuration::get().find(u.column(k)) == b.members[k]);
    }
    CHECK_THROWS(basis_unitary(0));
    CHECK_THROWS(basis_unitary(41));
  }

  TEST_CASE("measuring Omega_a in the computational basis") {
    auto st = entangled_state(j_a()).state;
    auto m = measure_pair(st, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) CHECK(m.prob[i][k] == (i + k == 3 ? Rational(1, 4) : Rational(0)));
    CHECK(m.distribution().normalized());
    CHECK(m.distribution().entries[3].label == "phi00,phi30");
  }

  TEST_CASE("product state") {
    auto m = measure_pair(BipartiteState::product(Vec4{1, 0, 0, 0}, Vec4{1, 0, 0, 0}), 4, 4);
    CHECK(m.prob[0][0] == Rational(1));
    CHECK(m.distribution().total() == Rational(1));
    CHECK_THROWS(measure_pair(BipartiteState::product(Vec4{1, 0, 0, 0}, Vec4{1, 0, 0, 0}), 0, 4));
  }

  TEST_CASE("paired bases are perfectly anti-correlated") {
    for (char c : {'a', '1', '2'}) {
      auto st = entangled_state(named_j(c)).state;
      auto opp = golden::opposite_table(c);
      auto pairs = golden::basis_pairing(c);
      for (int b = 1; b <= 40; ++b) {
        auto m = measure_pair(st, b, pairs[b - 1]);
        int nonzero = 0;
        for (int i = 0; i < 4; ++i)
          for (int k = 0; k < 4; ++k) {
            if (m.prob[i][k].is_zero()) continue;
            ++nonzero;
            CHECK(m.prob[i][k] == Rational(1, 4));
            CHECK(opp[m.rays1[i]] == m.rays2[k]);
          }
        CHECK(nonzero == 4);
      }
    }
    auto m = measure_pair(entangled_state(j_a()).state, 1, 38);
    CHECK(m.distribution().normalized());
  }

  TEST_CASE("every distribution sums to one") {
    auto st = entangled_state(j_2()).state;
    for (int b1 = 1; b1 <= 40; ++b1)
      for (int b2 = 1; b2 <= 40; ++b2) REQUIRE(measure_pair(st, b1, b2).distribution().normalized());
  }

  TEST_CASE("controlled measurement operator") {
    CHECK(cm_operator(phi(3, 0).coords()) == toffoli());
    for (const auto& r : Configuration::get().rays()) CHECK(is_unitary(cm_operator(r.coords())));
    auto cm = cm_operator(phi(1, 4).coords());
    const auto& v = phi(1, 4).coords();
    for (int s = 0; s < 4; ++s) {
      Eisenstein flipped, kept;
      for (int t = 0; t < 4; ++t) {
        flipped += cm(2 * s + 1, 2 * t) * v[t];
        kept += cm(2 * s, 2 * t) * v[t];
      }
      CHECK(flipped == v[s]);
      CHECK(kept.is_zero());
    }
    const auto& u = phi(1, 5).coords();
    REQUIRE(inner(u, v).is_zero());
    for (int s = 0; s < 4; ++s) {
      Eisenstein flipped;
      for (int t = 0; t < 4; ++t) flipped += cm(2 * s + 1, 2 * t) * u[t];
      CHECK(flipped.is_zero());
    }
    CHECK_THROWS(cm_operator(Vec4{}));
  }

  TEST_CASE("contextual sequences") {
    auto st = entangled_state(j_a()).state;
    std::vector<Vec4> basis4;
    for (int l = 0; l < 4; ++l) basis4.push_back(phi(l, 0).coords());
    auto branches = contextual_sequence(st, 1, basis4);
    REQUIRE(branches.size() == 4);
    for (const auto& br : branches) {
      CHECK(std::count(br.ancilla.begin(), br.ancilla.end(), 1) == 1);
      CHECK(br.probability == Rational(1, 4));
    }
    auto prod = BipartiteState::product(phi(0, 0).coords(), phi(2, 7).coords());
    auto det = contextual_sequence(prod, 1, {phi(0, 0).coords()});
    REQUIRE(det.size() == 1);
    CHECK(det[0].ancilla == std::vector<int>{1});
    CHECK(det[0].probability == Rational(1));
    CHECK_THROWS(contextual_sequence(st, 1, {phi(0, 0).coords(), phi(1, 1).coords()}));
    CHECK_THROWS(contextual_sequence(st, 3, basis4));
  }

  TEST_CASE("collapse onto the opposite ray") {
    auto st = entangled_state(j_a()).state;
    const auto& cfg = Configuration::get();
    for (const auto& b : enumerate_bases()) {
      std::vector<Vec4> phis;
      for (int r : b.members) phis.push_back(cfg.ray(r).coords());
      for (int side : {1, 2}) {
        for (const auto& br : contextual_sequence(st, side, phis)) {
          int i = static_cast<int>(std::find(br.ancilla.begin(), br.ancilla.end(), 1) - br.ancilla.begin());
          REQUIRE(i < 4);
          Vec4 other = BipartiteState(br.amplitudes).conditional_partner(side, phis[i]);
          CHECK(cfg.find(other) == j_opposite_index(b.members[i], j_a()));
        }
      }
    }
  }

  TEST_CASE("joint rotation by W_H") {
    auto st = entangled_state(j_a()).state;
    auto wh = subgroup_WH();
    for (std::size_t n = 0; n < wh.order(); n += 7) {
      const auto& a = wh[n];
      auto rotated = st.apply(a, a);
      CHECK(rotated == st);
    }
  }

  TEST_CASE("sampling") {
    OutcomeDistribution point{{{"x", Rational(1)}, {"y", Rational(0)}}};
    auto s = sample_outcomes(point, 3, 500);
    CHECK(s.counts == std::vector<std::uint64_t>{500, 0});
    OutcomeDistribution uniform{{{"a", Rational(1, 4)}, {"b", Rational(1, 4)}, {"c", Rational(1, 4)}, {"d", Rational(1, 4)}}};
    auto u1 = sample_outcomes(uniform, 99, 4000);
    auto u2 = sample_outcomes(uniform, 99, 4000);
    CHECK(u1.counts == u2.counts);
    CHECK(u1.algorithm == "mt19937_64/rejection-mod-lcd");
    for (auto c : u1.counts) CHECK(std::abs(static_cast<double>(c) - 1000.0) <= 4 * std::sqrt(1000.0));
    CHECK(sample_outcomes(uniform, 100, 4000).counts != u1.counts);
    OutcomeDistribution bad{{{"a", Rational(1, 2)}}};
    CHECK_THROWS(sample_outcomes(bad, 1, 10));
    CHECK_THROWS(sample_outcomes(OutcomeDistribution{}, 1, 10));
  }
}

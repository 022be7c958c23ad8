#include <set>

#include "doctest.h"
#include "witting/contextuality.hpp"
#include "witting/group.hpp"
#include "witting/jmatrix.hpp"

using namespace witting;

namespace {

const Eisenstein w = Eisenstein::omega();
const Ray& phi(int l, int n) { return Configuration::get().ray(l, n); }

}  // namespace

TEST_SUITE("symmetry-group") {
  TEST_CASE("triflection generators") {
    CHECK(generator_R(1) == Matrix4::diagonal({w, 1, 1, 1}));
    for (int k = 1; k <= 4; ++k) {
      auto r = generator_R(k);
      CHECK((r * r * r).is_identity());
      CHECK(r.det() == w);
      CHECK(r.is_unitary());
      CHECK(generator_r(k).det() == Eisenstein(1));
    }
    CHECK_THROWS(generator_R(0));
    CHECK_THROWS(generator_R(5));
  }

  TEST_CASE("reflections") {
    CHECK(reflection(phi(0, 0), w) == generator_R(1));
    CHECK(reflection(phi(3, 1), w) == generator_R(2));
    CHECK(reflection(phi(2, 0), w) == generator_R(3));
    CHECK(reflection(phi(0, 1), w) == generator_R(4));
    CHECK(reflection(phi(2, 7), Eisenstein(1)).is_identity());
    auto s = reflection(phi(1, 4), Eisenstein(-1));
    CHECK((s * s).is_identity());
    CHECK(s.is_unitary());
    CHECK_THROWS(reflection(phi(0, 0), Eisenstein(2)));
  }

  TEST_CASE("closure orders") {
    const auto& g = witting_group();
    CHECK(g.order() == 51840);
    CHECK(full_symmetry_group().order() == 155520);
    CHECK(MatrixGroup::closure({generator_r(1) * generator_r(3), generator_r(2) * generator_r(4).inverse()}, 1000)
              .order() == 720);
    CHECK_THROWS_AS(MatrixGroup::closure({generator_r(1), generator_r(2), generator_r(3), generator_r(4)}, 1000),
                    ClosureCapExceeded);
  }

  TEST_CASE("every element of W preserves the configuration") {
    const auto& g = witting_group();
    std::size_t stab = 0;
    for (const auto& x : g.elements()) {
      REQUIRE(x.det() == Eisenstein(1));
      auto perm = ray_permutation(x);
      stab += perm[0] == 0;
    }
    CHECK(40 * stab == g.order());
  }

  TEST_CASE("action and orbits") {
    CHECK(act_on_ray(generator_r(1), phi(0, 0)) == phi(0, 0));
    CHECK(act_on_ray(Matrix4::identity(), phi(2, 6)) == phi(2, 6));
    std::vector<std::vector<int>> perms;
    for (const auto& x : witting_group().generators()) perms.push_back(ray_permutation(x));
    CHECK(set_orbit(perms, {0}).size() == 40);
    CHECK(set_orbit({}, {0}).size() == 1);
    CHECK_THROWS(ray_permutation(Matrix4::diagonal({1, 1, 1, -w * w * w * Eisenstein(2)})));
  }

  TEST_CASE("center and projective order") {
    const auto& g = witting_group();
    auto z = center(g);
    CHECK(z.size() == 2);
    CHECK(g.contains(-Matrix4::identity()));
    CHECK(g.order() / z.size() == 25920);
  }

  TEST_CASE("special subgroups") {
    auto diag = diagonal_subgroup();
    auto sp = signed_permutation_subgroup();
    CHECK(diag.order() == 27);
    CHECK(sp.order() == 48);
    CHECK(40 * diag.order() * sp.order() == 51840);
    auto wb = subgroup_WB(), wh = subgroup_WH(), w2h = subgroup_W2H();
    CHECK(wb.order() == 1920);
    CHECK(wh.order() == 720);
    CHECK(w2h.order() == 1440);
    const auto& g = witting_group();
    for (const auto* h : {&diag, &sp, &wb, &wh, &w2h})
      for (const auto& x : h->generators()) CHECK(g.contains(x));
    for (const auto& x : wh.elements()) CHECK(w2h.contains(x));
    CHECK_NOTHROW(special_subgroups());
  }

  TEST_CASE("published matrices belong to W") {
    const auto& g = witting_group();
    CHECK(g.contains(j_a().matrix));
    CHECK(g.contains(j_2().matrix));
    CHECK(g.contains(s_1()));
    CHECK(g.contains(s_2()));
    for (const auto& p : signed_permutation_generators()) CHECK(g.contains(p));
  }

  TEST_CASE("conjugates and cosets") {
    auto w2h = subgroup_W2H();
    auto same = conjugate_subgroup(Matrix4::identity(), w2h);
    CHECK(same.order() == w2h.order());
    for (const auto& x : w2h.generators()) CHECK(same.contains(x));
    auto reps = coset_representatives(witting_group(), w2h);
    CHECK(reps.size() == 36);
    CHECK(conjugate_subgroup(reps.back(), w2h).order() == 1440);
    std::set<std::string> keys;
    for (const auto& s : reps) keys.insert(canonical_key(s));
    CHECK(keys.size() == 36);
  }

  TEST_CASE("W_H modulo its center is simple of order 360") {
    auto wh = subgroup_WH();
    CHECK(center(wh).size() == 2);
    auto classes = conjugacy_classes(wh);
    std::set<int> seen;
    for (std::size_t i = 0; i < wh.order(); ++i) {
      if (!seen.insert(classes[i]).second) continue;
      const auto& x = wh[i];
      if (x.is_identity() || (-x).is_identity()) continue;
      CHECK(normal_closure(wh.generators(), x).order() == 720);
    }
    CHECK(seen.size() == 13);
  }

  TEST_CASE("elements per basis") {
    std::vector<int> count(40, 0), count_b(40, 0);
    for (const auto& x : witting_group().elements()) ++count[*find_basis(column_rays(x)) - 1];
    auto wb = subgroup_WB();
    for (const auto& x : wb.elements()) ++count_b[*find_basis(column_rays(x)) - 1];
    for (int c : count) CHECK(c == 1296);
    for (int c : count_b) CHECK(c == 48);
  }

  TEST_CASE("canonical keys distinguish elements") {
    CHECK(canonical_key(Matrix4::identity()) == "1;0;0;0;0;1;0;0;0;0;1;0;0;0;0;1");
    CHECK(canonical_key(generator_r(1)) != canonical_key(generator_r(2)));
  }
}

#include <algorithm>
#include <set>

#include "doctest.h"
#include "witting/gf4.hpp"
#include "witting/rays.hpp"

using namespace witting;
using gf4::GF4;

namespace {

const GF4 O = GF4::zero(), I = GF4::one(), W = GF4::w(), B = GF4::wb();

}  // namespace

TEST_SUITE("gf4-model") {
  TEST_CASE("addition and multiplication tables") {
    const GF4 add[4][4] = {{O, I, W, B}, {I, O, B, W}, {W, B, O, I}, {B, W, I, O}};
    const GF4 mul[4][4] = {{O, O, O, O}, {O, I, W, B}, {O, W, B, I}, {O, B, I, W}};
    const GF4 el[4] = {O, I, W, B};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(el[i] + el[j] == add[i][j]);
        CHECK(el[i] * el[j] == mul[i][j]);
        CHECK(gf4::gf4_add(el[i], el[j]) == add[i][j]);
        CHECK(gf4::gf4_mul(el[i], el[j]) == mul[i][j]);
      }
    CHECK(W + B == I);
    CHECK(W * W == B);
    CHECK(W.conj() == B);
    CHECK(gf4::gf4_conj(I) == I);
    CHECK(W.str() == "w");
    CHECK(B.str() == "wb");
  }

  TEST_CASE("field axioms, exhaustive") {
    for (auto x : GF4::all()) {
      if (!x.is_zero()) CHECK(x * x.inverse() == I);
      CHECK(x + x == O);
      for (auto y : GF4::all())
        for (auto z : GF4::all()) {
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
    }
    CHECK_THROWS(O.inverse());
  }

  TEST_CASE("reduction drops signs") {
    const auto& cfg = Configuration::get();
    CHECK(gf4::reduce_ray(cfg.ray(0, 1)).coords == gf4::Vec{O, I, I, I});
    CHECK(gf4::reduce_ray(cfg.ray(0, 0)).coords == gf4::Vec{I, O, O, O});
    auto pts = gf4::reduced_points();
    std::set<std::string> distinct;
    for (const auto& p : pts) distinct.insert(p.str());
    CHECK(distinct.size() == 40);
    CHECK_THROWS(gf4::reduce_ray(canonicalize(Vec4{1, 2, 0, 0})));
  }

  TEST_CASE("hermitian orthogonality matches the complex graph") {
    const auto& cfg = Configuration::get();
    auto pts = gf4::reduced_points();
    CHECK(gf4::hermitian_orthogonal(pts[0], pts[30]));
    CHECK(gf4::hermitian_orthogonal(pts[0], pts[1]));
    CHECK_FALSE(gf4::hermitian_orthogonal(pts[0], pts[11]));
    for (int i = 0; i < 40; ++i)
      for (int j = i + 1; j < 40; ++j) CHECK(gf4::hermitian_orthogonal(pts[i], pts[j]) == cfg.orthogonal(i, j));
    CHECK(gf4::orthogonality_edges(pts).size() == 240);
  }

  TEST_CASE("generators") {
    auto gens = gf4::gf4_generators();
    REQUIRE(gens.size() == 4);
    CHECK(gens[0] == gf4::Mat{I, O, O, O, O, B, O, O, O, O, B, O, O, O, O, B});
    for (const auto& m : gens) {
      CHECK(gf4::det(m) == I);
      CHECK(gf4::unpack(gf4::pack(m)) == m);
    }
    auto pts = gf4::reduced_points();
    for (const auto& m : gens)
      for (const auto& p : pts) {
        auto img = gf4::canonical_point(gf4::mat_apply(m, p.coords));
        CHECK(std::find(pts.begin(), pts.end(), img) != pts.end());
      }
  }

  TEST_CASE("projective group order") {
    CHECK(gf4::projective_closure(gf4::gf4_generators(), 30000).size() == 25920);
    CHECK_THROWS(gf4::projective_closure(gf4::gf4_generators(), 100));
  }
}

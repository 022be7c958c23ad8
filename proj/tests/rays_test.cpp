#include <set>

#include "doctest.h"
#include "witting/golden.hpp"
#include "witting/matrix.hpp"
#include "witting/rays.hpp"

using namespace witting;

namespace {

const Eisenstein w = Eisenstein::omega();
const Eisenstein wb = Eisenstein::omega_bar();

const Ray& phi(int l, int n) { return Configuration::get().ray(l, n); }

}  // namespace

TEST_SUITE("witting-states") {
  TEST_CASE("matrix basics") {
    Matrix4 m{1, w, 0, 0, 0, 1, 0, 0, 0, 0, wb, 0, 0, 0, 0, 1};
    CHECK(m.det() == wb);
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.transpose().transpose() == m);
    CHECK(m.adjoint() == m.conj().transpose());
    CHECK(Matrix4::identity().is_unitary());
    CHECK_FALSE(m.is_unitary());
    CHECK_THROWS(Matrix4{}.inverse());
    std::vector<Vec4> rows = {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{1, 1, 0, 0}};
    CHECK(rank(rows) == 2);
  }

  TEST_CASE("generated table") {
    auto rays = generate_rays();
    REQUIRE(rays.size() == 40);
    CHECK(phi(0, 1).coords() == Vec4{0, 1, -1, 1});
    CHECK(phi(3, 9).coords() == Vec4{1, w, w, 0});
    CHECK(render_ray_table(rays) == golden::ray_table_text());
    auto pub = golden::ray_table_coords();
    for (int i = 0; i < 40; ++i) CHECK(rays[i].coords() == pub[i]);
    for (int l = 0; l < 4; ++l) {
      Vec4 axis{};
      axis[l] = 1;
      CHECK(phi(l, 0).coords() == axis);
    }
  }

  TEST_CASE("closed-form families give the same set") {
    std::set<int> hit;
    for (const auto& v : closed_form_rays()) {
      auto idx = Configuration::get().find(v);
      REQUIRE(idx.has_value());
      hit.insert(*idx);
    }
    CHECK(hit.size() == 40);
  }

  TEST_CASE("polytope vertices") {
    auto verts = generate_polytope_vertices();
    CHECK(verts.size() == 240);
    std::vector<int> per_ray(40, 0);
    for (const auto& v : verts) {
      REQUIRE(v.ray >= 0);
      ++per_ray[v.ray];
      CHECK(norm_sq(v.coords) == Rational(3));
    }
    for (int c : per_ray) CHECK(c == 6);
    Vec4 v{Eisenstein::i_sqrt3(), 0, 0, 0};
    CHECK(canonicalize(v).coords() == Vec4{1, 0, 0, 0});
  }

  TEST_CASE("inner products and overlaps") {
    CHECK(inner_product(phi(0, 0), phi(0, 1)).is_zero());
    CHECK(inner_product(phi(0, 0), phi(0, 0)) == Eisenstein(1));
    CHECK(inner_product(phi(0, 1), phi(1, 1)).is_zero());
    CHECK(overlap_sq(phi(0, 0), phi(1, 1)) == Rational(1, 3));
    CHECK(overlap_sq(phi(0, 0), phi(3, 0)) == Rational(0));
    CHECK(overlap_sq(phi(2, 5), phi(2, 5)) == Rational(1));
  }

  TEST_CASE("overlap dichotomy") {
    const auto& cfg = Configuration::get();
    for (int i = 0; i < 40; ++i) {
      CHECK(orthogonality_degree(cfg.ray(i)) == 12);
      int unbiased = 0;
      for (int j = 0; j < 40; ++j) {
        if (i == j) continue;
        auto o = overlap_sq(cfg.ray(i), cfg.ray(j));
        CHECK((o == Rational(0) || o == Rational(1, 3)));
        unbiased += o == Rational(1, 3);
      }
      CHECK(unbiased == 27);
    }
  }

  TEST_CASE("mutually unbiased triples") {
    const std::vector<std::vector<std::pair<int, int>>> triples = {
        {{0, 0}, {1, 0}, {2, 0}}, {{3, 1}, {3, 2}, {3, 3}}, {{3, 4}, {3, 5}, {3, 6}}, {{3, 7}, {3, 8}, {3, 9}}};
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        for (auto [l1, n1] : triples[p])
          for (auto [l2, n2] : triples[q]) {
            if (l1 == l2 && n1 == n2) continue;
            CHECK(phi(l1, n1).coords()[3].is_zero());
            CHECK(overlap_sq(phi(l1, n1), phi(l2, n2)) == (p == q ? Rational(0) : Rational(1, 3)));
          }
  }

  TEST_CASE("canonicalize") {
    CHECK(canonical_coords(Vec4{0, 2, -2, 2}) == Vec4{0, 1, -1, 1});
    CHECK(canonical_coords(Vec4{w, w * w, w * w, 0}) == Vec4{1, w, w, 0});
    CHECK(Configuration::get().find(Vec4{w, w * w, w * w, 0}) == 39);
    CHECK(canonical_coords(Vec4{0, 0, 0, wb}) == Vec4{0, 0, 0, 1});
    CHECK_THROWS(canonicalize(Vec4{}));
    for (const auto& r : Configuration::get().rays()) {
      CHECK(canonical_coords(r.coords()) == r.coords());
      CHECK(canonical_coords(scale(Eisenstein(Rational(-2, 5), 3), r.coords())) == r.coords());
    }
  }

  TEST_CASE("ray norms are 1 or 3") {
    int ones = 0;
    for (const auto& r : Configuration::get().rays()) {
      CHECK((r.norm_sq() == Rational(1) || r.norm_sq() == Rational(3)));
      ones += r.norm_sq() == Rational(1);
    }
    CHECK(ones == 4);
  }

  TEST_CASE("lookup rejects foreign vectors") {
    CHECK_FALSE(Configuration::get().find(Vec4{1, 1, 0, 0}).has_value());
    CHECK(Configuration::get().find(Vec4{0, 0, 5, 0}) == 20);
  }
}

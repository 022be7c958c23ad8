#include <random>

#include "doctest.h"
#include "witting/eisenstein.hpp"
#include "witting/rational.hpp"

using witting::ArithmeticOverflow;
using witting::Eisenstein;
using witting::Rational;

namespace {

const Eisenstein w = Eisenstein::omega();
const Eisenstein wb = Eisenstein::omega_bar();

Eisenstein random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_SUITE("exact-field") {
  TEST_CASE("rational normalization and printing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-3, 6).den() == 2);
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(Rational::parse("1/"));
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("rational overflow is detected") {
    Rational big(INT64_MAX);
    CHECK_THROWS_AS(big + Rational(1), ArithmeticOverflow);
    CHECK_THROWS_AS(big * Rational(2), ArithmeticOverflow);
    CHECK(big * Rational(1, 2) == Rational(INT64_MAX, 2));
  }

  TEST_CASE("addition") {
    CHECK(w + wb == Eisenstein(-1));
    Eisenstein x(Rational(3, 4), Rational(-2));
    CHECK(Eisenstein() + x == x);
    CHECK(Eisenstein(1, 1) + Eisenstein(-1, -1) == Eisenstein());
  }

  TEST_CASE("multiplication") {
    CHECK(w * w * w == Eisenstein(1));
    CHECK(w * wb == Eisenstein(1));
    CHECK(w * w == wb);
    CHECK(Eisenstein::i_sqrt3() * Eisenstein::i_sqrt3() == Eisenstein(-3));
    CHECK((Eisenstein(1) + Eisenstein(2) * w) == Eisenstein::i_sqrt3());
  }

  TEST_CASE("conjugation") {
    CHECK(w.conj() == Eisenstein(-1, -1));
    CHECK(Eisenstein(1).conj() == Eisenstein(1));
    Eisenstein x(Rational(5, 3), Rational(-7, 2));
    CHECK(x.conj().conj() == x);
    CHECK(Eisenstein::i_sqrt3().conj() == -Eisenstein::i_sqrt3());
  }

  TEST_CASE("modulus") {
    CHECK(w.modulus_sq() == Rational(1));
    CHECK(Eisenstein().modulus_sq() == Rational(0));
    CHECK((Eisenstein(1) - w).modulus_sq() == Rational(3));
    CHECK(Eisenstein::i_sqrt3().modulus_sq() == Rational(3));
  }

  TEST_CASE("units") {
    for (int sign : {1, -1})
      for (int k = 0; k < 3; ++k) {
        auto u = Eisenstein::unit(sign, k);
        CHECK(u.modulus_sq() == Rational(1));
        auto back = u.as_unit();
        REQUIRE(back.has_value());
        CHECK(back->first == sign);
        CHECK(back->second == k);
      }
    CHECK_FALSE(Eisenstein(2).as_unit().has_value());
    CHECK_FALSE(Eisenstein::i_sqrt3().as_unit().has_value());
  }

  TEST_CASE("text grammar round trip") {
    CHECK(w.str() == "w");
    CHECK((-w).str() == "-w");
    CHECK(wb.str() == "-1-w");
    CHECK(Eisenstein(Rational(1, 3), Rational(2, 3)).str() == "1/3+2/3*w");
    CHECK(Eisenstein(0, 3).str() == "3*w");
    CHECK(Eisenstein().str() == "0");
    CHECK(Eisenstein::parse("-1-w") == wb);
    CHECK(Eisenstein::parse("2/6-4/6*w") == Eisenstein(Rational(1, 3), Rational(-2, 3)));
    CHECK_THROWS(Eisenstein::parse("w+"));
    CHECK_THROWS(Eisenstein::parse("x"));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      auto x = random_element(rng);
      CHECK(Eisenstein::parse(x.str()) == x);
    }
  }

  TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 300; ++t) {
      auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * x.inverse() == Eisenstein(1));
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK((x * y).modulus_sq() == x.modulus_sq() * y.modulus_sq());
      CHECK(x.modulus_sq().is_zero() == x.is_zero());
    }
    CHECK_THROWS(Eisenstein().inverse());
  }
}

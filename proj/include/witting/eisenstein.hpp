#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "witting/rational.hpp"

namespace witting {

/// Element a + b*w of the Eisenstein field Q(w), where w = (-1 + i*sqrt(3))/2.
///
/// Multiplication reduces with w^2 = -1 - w; conjugation sends w to
/// conj(w) = w^2 = -1 - w.  The usual complex constants used throughout the
/// library all live here: i*sqrt(3) = 2w + 1, and the six units are +-w^k.
class Eisenstein {
 public:
  constexpr Eisenstein() = default;
  constexpr Eisenstein(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Eisenstein(Rational a) : a_(a) {}                // NOLINT(google-explicit-constructor)
  Eisenstein(Rational a, Rational b) : a_(a), b_(b) {}

  static Eisenstein omega() { return {0, 1}; }
  static Eisenstein omega_bar() { return {-1, -1}; }
  /// i*sqrt(3), expressed as 2w + 1.
  static Eisenstein i_sqrt3() { return {1, 2}; }
  /// The unit sign * w^power.
  static Eisenstein unit(int sign, int power);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Eisenstein conj() const { return {a_ - b_, -b_}; }
  /// |x|^2 = a^2 - ab + b^2.
  Rational modulus_sq() const;
  Eisenstein inverse() const;

  /// If this is +-w^k, returns (sign, k) with k in {0,1,2}.
  std::optional<std::pair<int, int>> as_unit() const;

  Eisenstein operator-() const { return {-a_, -b_}; }
  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y);
  friend Eisenstein operator/(const Eisenstein& x, const Eisenstein& y) { return x * y.inverse(); }

  Eisenstein& operator+=(const Eisenstein& y) {
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  Eisenstein& operator-=(const Eisenstein& y) {
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
  /// Total order on (a, b); only used for deterministic sorting.
  friend std::strong_ordering operator<=>(const Eisenstein& x, const Eisenstein& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  /// Canonical text: "a", "b*w", "a+b*w", with unit coefficients of w
  /// written bare ("w", "-w", "1+w").  Rationals are reduced.
  std::string str() const;
  static Eisenstein parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

}  // namespace witting

template <>
struct std::hash<witting::Eisenstein> {
  std::size_t operator()(const witting::Eisenstein& x) const noexcept {
    std::hash<witting::Rational> h;
    return h(x.a()) * 31 + h(x.b());
  }
};

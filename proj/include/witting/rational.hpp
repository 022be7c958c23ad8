#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace witting {

/// Thrown when an exact integer operation would not fit in 64 bits.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Reduced fraction num/den with den > 0.
///
/// Arithmetic is done in 128-bit intermediates and the reduced result is
/// checked back into 64 bits; anything that does not fit throws
/// ArithmeticOverflow instead of wrapping.  Values met in this library have
/// tiny numerators and denominators (powers of 3), so the checked path is
/// essentially never hit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Accepts "n" or "n/d" (optional leading sign, no spaces).
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace witting

template <>
struct std::hash<witting::Rational> {
  std::size_t operator()(const witting::Rational& r) const noexcept {
    auto h = static_cast<std::uint64_t>(r.num()) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(r.den()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

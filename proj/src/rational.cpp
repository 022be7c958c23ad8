#include "witting/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace witting {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational{};
  if (d != 1) {
    i128 g = gcd128(n, d);
    if (g != 1) {
      n /= g;
      d /= g;
    }
  }
  if (!fits64(n) || !fits64(d)) throw ArithmeticOverflow("rational exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow("rational negation overflow");
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  return from_wide(den_, num_);
}

Rational operator+(const Rational& x, const Rational& y) {
  if (x.num_ == 0) return y;
  if (y.num_ == 0) return x;
  if (x.den_ == y.den_) {
    return Rational::from_wide(static_cast<i128>(x.num_) + y.num_, x.den_);
  }
  return Rational::from_wide(static_cast<i128>(x.num_) * y.den_ + static_cast<i128>(y.num_) * x.den_,
                             static_cast<i128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  if (y.num_ == 0) return x;
  if (x.den_ == y.den_) {
    return Rational::from_wide(static_cast<i128>(x.num_) - y.num_, x.den_);
  }
  return Rational::from_wide(static_cast<i128>(x.num_) * y.den_ - static_cast<i128>(y.num_) * x.den_,
                             static_cast<i128>(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  if (x.num_ == 0 || y.num_ == 0) return Rational{};
  if (x.den_ == 1 && y.den_ == 1) {
    return Rational::from_wide(static_cast<i128>(x.num_) * y.num_, 1);
  }
  return Rational::from_wide(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("division by zero");
  return Rational::from_wide(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return static_cast<i128>(x.num_) * y.den_ <=> static_cast<i128>(y.num_) * x.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace witting

#include "witting/eisenstein.hpp"

#include <ostream>
#include <stdexcept>

namespace witting {

Eisenstein Eisenstein::unit(int sign, int power) {
  static const Eisenstein powers[3] = {Eisenstein(1), omega(), omega_bar()};
  const Eisenstein& p = powers[((power % 3) + 3) % 3];
  return sign < 0 ? -p : p;
}

Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.b_.is_zero()) return {x.a_ * y.a_, x.a_ * y.b_};
  if (y.b_.is_zero()) return {x.a_ * y.a_, x.b_ * y.a_};
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
  Rational bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

Rational Eisenstein::modulus_sq() const { return a_ * a_ - a_ * b_ + b_ * b_; }

Eisenstein Eisenstein::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(w)");
  Rational n = modulus_sq().inverse();
  Eisenstein c = conj();
  return {c.a_ * n, c.b_ * n};
}

std::optional<std::pair<int, int>> Eisenstein::as_unit() const {
  for (int sign : {1, -1}) {
    for (int k = 0; k < 3; ++k) {
      if (*this == unit(sign, k)) return std::make_pair(sign, k);
    }
  }
  return std::nullopt;
}

std::string Eisenstein::str() const {
  if (b_.is_zero()) return a_.str();
  std::string wpart;
  Rational mag = b_.sign() < 0 ? -b_ : b_;
  wpart = mag == Rational(1) ? "w" : mag.str() + "*w";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + wpart;
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + wpart;
}

Eisenstein Eisenstein::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("bad Q(w) literal '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (text.back() != 'w') return Eisenstein(Rational::parse(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view real_part;
  std::string_view w_part = body;
  if (split != std::string_view::npos) {
    real_part = body.substr(0, split);
    w_part = body.substr(split);
    if (real_part.empty()) fail();
  }

  int sign = 1;
  if (!w_part.empty() && (w_part.front() == '+' || w_part.front() == '-')) {
    sign = w_part.front() == '-' ? -1 : 1;
    w_part.remove_prefix(1);
  }
  Rational coef(1);
  if (!w_part.empty()) {
    if (w_part.back() != '*' || w_part.size() < 2) fail();
    coef = Rational::parse(w_part.substr(0, w_part.size() - 1));
  }
  if (sign < 0) coef = -coef;
  Rational real = real_part.empty() ? Rational(0) : Rational::parse(real_part);
  return {real, coef};
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << x.str(); }

}  // namespace witting

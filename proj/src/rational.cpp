#include "residuum/rational.hpp"

#include <limits>
#include <utility>

namespace residuum {

namespace {

SignedWide wide_abs(SignedWide v) { return v < 0 ? -v : v; }

SignedWide wide_gcd(SignedWide a, SignedWide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  if ((a >> 64) == 0 && (b >> 64) == 0) return gcd(static_cast<Natural>(a), static_cast<Natural>(b));
  while (b != 0) {
    SignedWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer narrow_signed(SignedWide v) {
  if (v > std::numeric_limits<Integer>::max() || v < std::numeric_limits<Integer>::min())
    throw Error(Errc::overflow, "rational component exceeds 64 bits");
  return static_cast<Integer>(v);
}

}  // namespace

Rational::Rational(Integer num, Integer den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(SignedWide num, SignedWide den) {
  if (den == 0) throw Error(Errc::domain, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  SignedWide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow_signed(num);
  r.den_ = narrow_signed(den);
  return r;
}

std::optional<Rational> Rational::sqrt() const {
  if (num_ < 0) return std::nullopt;
  auto n = static_cast<Natural>(num_);
  auto d = static_cast<Natural>(den_);
  Natural rn = isqrt(n), rd = isqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(static_cast<Integer>(rn), static_cast<Integer>(rd));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<SignedWide>(a.num_) * b.den_ + static_cast<SignedWide>(b.num_) * a.den_,
                             static_cast<SignedWide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<SignedWide>(a.num_) * b.den_ - static_cast<SignedWide>(b.num_) * a.den_,
                             static_cast<SignedWide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<SignedWide>(a.num_) * b.num_, static_cast<SignedWide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(Errc::domain, "rational division by zero");
  return Rational::from_wide(static_cast<SignedWide>(a.num_) * b.den_, static_cast<SignedWide>(a.den_) * b.num_);
}

Rational operator-(const Rational& a) { return Rational::from_wide(-static_cast<SignedWide>(a.num_), a.den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  SignedWide lhs = static_cast<SignedWide>(a.num_) * b.den_;
  SignedWide rhs = static_cast<SignedWide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace residuum

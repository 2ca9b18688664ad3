#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "residuum/integer.hpp"

namespace residuum {

/// Exact rational in lowest terms with a positive denominator. Arithmetic is
/// carried out in 128 bits and rejects results that do not fit back in 64.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Integer value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  Integer num() const noexcept { return num_; }
  Integer den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// Exact square root when both numerator and denominator are squares.
  std::optional<Rational> sqrt() const;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(SignedWide num, SignedWide den);

  Integer num_ = 0;
  Integer den_ = 1;
};

}  // namespace residuum

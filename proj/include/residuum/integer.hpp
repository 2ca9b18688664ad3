#pragma once

#include <cstdint>
#include <vector>

#include "residuum/error.hpp"

namespace residuum {

// Every integer quantity in the number-theory modules lives in 64 bits;
// products are formed in 128 bits and narrowed through the checked helpers.
using Natural = std::uint64_t;
using Integer = std::int64_t;
using Wide = unsigned __int128;
using SignedWide = __int128;

Natural checked_add(Natural a, Natural b);
Natural checked_sub(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);
inline Natural narrow(Wide v) {
  if (v >> 64 != 0) throw Error(Errc::overflow, "value exceeds 64 bits");
  return static_cast<Natural>(v);
}

/// Binary gcd with branch-free reduction steps; gcd(0, b) = b.
inline Natural gcd(Natural a, Natural b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  int az = __builtin_ctzll(a);
  b >>= __builtin_ctzll(b);
  while (a != 0) {
    a >>= az;
    const Natural diff = b - a;
    // The top bit keeps the count defined when diff is 0, which ends the loop.
    az = __builtin_ctzll(diff | (Natural{1} << 63));
    b = a < b ? a : b;
    a = static_cast<Integer>(diff) < 0 ? -diff : diff;
  }
  return b << shift;
}

Natural isqrt(Natural n) noexcept;
Natural isqrt_wide(Wide n) noexcept;
bool is_square(Natural n) noexcept;
bool is_square_wide(Wide n) noexcept;

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(Natural n) noexcept;

/// All divisors of n, ascending. Throws Errc::zero_input for n = 0.
std::vector<Natural> divisors(Natural n);

/// Distinct prime factors of n, ascending.
std::vector<Natural> prime_factors(Natural n);

/// Eratosthenes table for sweeps; answers is_prime in O(1) up to limit().
class PrimeSieve {
 public:
  explicit PrimeSieve(Natural limit);

  Natural limit() const noexcept { return limit_; }
  bool operator()(Natural n) const noexcept {
    return n <= limit_ ? composite_[n] == 0 : is_prime(n);
  }

 private:
  Natural limit_;
  std::vector<std::uint8_t> composite_;
};

struct TwoSquaresRep {
  Natural n;
  Natural a;
  Natural b;

  friend bool operator==(const TwoSquaresRep&, const TwoSquaresRep&) = default;
};

/// Every (a, b) with a >= b >= 0 and a^2 + b^2 = n, ascending in a.
/// b = 0 is kept; callers that need b >= 1 filter.
std::vector<TwoSquaresRep> two_squares(Natural n);

struct PythagoreanTriple {
  Natural leg1;  // 2MN
  Natural leg2;  // M^2 - N^2
  Natural hyp;   // M^2 + N^2

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

/// Throws Errc::below_minimum, not_ordered, not_coprime or same_parity.
void check_primitive_generator(Natural M, Natural N);

PythagoreanTriple pythagorean_from(Natural M, Natural N);

}  // namespace residuum

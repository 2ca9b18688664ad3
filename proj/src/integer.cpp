#include "residuum/integer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace residuum {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::overflow: return "overflow";
    case Errc::zero_input: return "zero_input";
    case Errc::odd_input: return "odd_input";
    case Errc::not_ordered: return "not_ordered";
    case Errc::below_minimum: return "below_minimum";
    case Errc::not_coprime: return "not_coprime";
    case Errc::same_parity: return "same_parity";
    case Errc::not_divisor: return "not_divisor";
    case Errc::non_integral: return "non_integral";
    case Errc::bad_ending: return "bad_ending";
    case Errc::outside_class: return "outside_class";
    case Errc::negative_radicand: return "negative_radicand";
    case Errc::irrational_root: return "irrational_root";
    case Errc::domain: return "domain";
    case Errc::syntax: return "syntax";
    case Errc::unknown_identifier: return "unknown_identifier";
    case Errc::grid_mismatch: return "grid_mismatch";
    case Errc::boundary_violation: return "boundary_violation";
    case Errc::unknown_claim: return "unknown_claim";
    case Errc::io: return "io";
  }
  return "unknown";
}

Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "64-bit addition overflow");
  return r;
}

Natural checked_sub(Natural a, Natural b) {
  if (b > a) throw Error(Errc::overflow, "natural subtraction underflow");
  return a - b;
}

Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "64-bit multiplication overflow");
  return r;
}

Natural isqrt(Natural n) noexcept {
  auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Natural isqrt_wide(Wide n) noexcept {
  if (n >> 64 == 0) return isqrt(static_cast<Natural>(n));
  // sqrt of a 128-bit value fits in 64 bits; refine the floating estimate.
  constexpr Wide kMaxRoot = ~Natural{0};
  Wide r = std::min(kMaxRoot, static_cast<Wide>(std::sqrt(static_cast<long double>(n))));
  while (r * r > n) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
  return static_cast<Natural>(r);
}

bool is_square(Natural n) noexcept {
  Natural r = isqrt(n);
  return r * r == n;
}

bool is_square_wide(Wide n) noexcept {
  Wide r = isqrt_wide(n);
  return r * r == n;
}

namespace {

Natural mul_mod(Natural a, Natural b, Natural m) noexcept {
  return static_cast<Natural>(static_cast<Wide>(a) * b % m);
}

Natural pow_mod(Natural base, Natural exp, Natural m) noexcept {
  Natural result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(Natural n) noexcept {
  if (n < 2) return false;
  static constexpr Natural small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (Natural p : small) {
    if (n % p == 0) return n == p;
  }
  Natural d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (Natural a : small) {
    Natural x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<Natural> divisors(Natural n) {
  if (n == 0) throw Error(Errc::zero_input, "divisors: n must be >= 1");
  std::vector<Natural> low, high;
  for (Natural d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<Natural> prime_factors(Natural n) {
  std::vector<Natural> out;
  for (Natural p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeSieve::PrimeSieve(Natural limit) : limit_(limit), composite_(limit + 1, 0) {
  composite_[0] = 1;
  if (limit >= 1) composite_[1] = 1;
  for (Natural p = 2; p <= limit / p; ++p) {
    if (composite_[p]) continue;
    for (Natural q = p * p; q <= limit; q += p) composite_[q] = 1;
  }
}

std::vector<TwoSquaresRep> two_squares(Natural n) {
  std::vector<TwoSquaresRep> reps;
  for (Natural b = 0; static_cast<Wide>(2) * b * b <= n; ++b) {
    Natural rest = n - b * b;
    Natural a = isqrt(rest);
    if (a * a == rest) reps.push_back({n, a, b});
  }
  // b ascends, so a descends.
  std::reverse(reps.begin(), reps.end());
  return reps;
}

void check_primitive_generator(Natural M, Natural N) {
  if (N < 1) throw Error(Errc::below_minimum, "generator requires N >= 1");
  if (M <= N) throw Error(Errc::not_ordered, "generator requires M > N");
  if (gcd(M, N) != 1) throw Error(Errc::not_coprime, "generator requires gcd(M, N) = 1");
  if ((M - N) % 2 == 0) throw Error(Errc::same_parity, "generator requires M, N of opposite parity");
}

PythagoreanTriple pythagorean_from(Natural M, Natural N) {
  check_primitive_generator(M, N);
  const Natural mm = checked_mul(M, M);
  const Natural nn = checked_mul(N, N);
  return {checked_mul(2, checked_mul(M, N)), mm - nn, checked_add(mm, nn)};
}

}  // namespace residuum

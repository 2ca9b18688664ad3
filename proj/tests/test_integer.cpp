#include <algorithm>
#include <limits>

#include "doctest.h"
#include "residuum/integer.hpp"

using namespace residuum;

namespace {

bool trial_division_prime(Natural n) {
  if (n < 2) return false;
  for (Natural d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Natural euclid_gcd(Natural a, Natural b) {
  while (b != 0) {
    const Natural t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("checked arithmetic rejects overflow") {
  constexpr Natural max = std::numeric_limits<Natural>::max();
  CHECK(checked_add(max - 1, 1) == max);
  CHECK_THROWS_AS(checked_add(max, 1), Error);
  CHECK_THROWS_AS(checked_sub(1, 2), Error);
  CHECK(checked_mul(Natural{1} << 32, (Natural{1} << 32) - 1) == max - ((Natural{1} << 32) - 1));
  CHECK_THROWS_AS(checked_mul(Natural{1} << 32, Natural{1} << 32), Error);
  CHECK(narrow(static_cast<Wide>(max)) == max);
  try {
    narrow(static_cast<Wide>(max) + 1);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::overflow);
  }
}

TEST_CASE("gcd matches the Euclidean algorithm") {
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(7, 0) == 7);
  CHECK(gcd(Natural{1} << 63, Natural{3} << 61) == Natural{1} << 61);
  for (Natural a = 0; a < 300; ++a) {
    for (Natural b = 0; b < 300; ++b) REQUIRE(gcd(a, b) == euclid_gcd(a, b));
  }
  constexpr Natural big = 18446744073709551557ull;  // largest 64-bit prime
  CHECK(gcd(big, big - 1) == 1);
  CHECK(gcd(big, big) == big);
}

TEST_CASE("integer square roots") {
  for (Natural n = 0; n < 20000; ++n) {
    const Natural r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
    REQUIRE(is_square(n) == (r * r == n));
  }
  constexpr Natural max = std::numeric_limits<Natural>::max();
  CHECK(isqrt(max) == 4294967295ull);
  const Wide big = static_cast<Wide>(max) * max;
  CHECK(isqrt_wide(big) == max);
  CHECK(is_square_wide(big));
  CHECK_FALSE(is_square_wide(big - 1));
  CHECK(isqrt_wide(big - 1) == max - 1);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(1000000007));
  for (Natural n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK(is_prime(18446744073709551557ull));
  CHECK_FALSE(is_prime(4294967291ull * 4294967291ull));  // square of the largest 32-bit prime
}

TEST_CASE("sieve agrees with Miller-Rabin, including beyond its limit") {
  const PrimeSieve sieve(5000);
  for (Natural n = 0; n < 6000; ++n) REQUIRE(sieve(n) == is_prime(n));
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Natural>{1});
  CHECK(divisors(16) == std::vector<Natural>{1, 2, 4, 8, 16});
  CHECK(divisors(36) == std::vector<Natural>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK_THROWS_AS(divisors(0), Error);
  for (Natural n = 1; n < 2000; ++n) {
    std::vector<Natural> oracle;
    for (Natural d = 1; d <= n; ++d) {
      if (n % d == 0) oracle.push_back(d);
    }
    REQUIRE(divisors(n) == oracle);
  }
}

TEST_CASE("distinct prime factors") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(360) == std::vector<Natural>{2, 3, 5});
  CHECK(prime_factors(1000000007) == std::vector<Natural>{1000000007});
  for (Natural n = 2; n < 3000; ++n) {
    std::vector<Natural> oracle;
    for (Natural p = 2; p <= n; ++p) {
      if (n % p == 0 && trial_division_prime(p)) oracle.push_back(p);
    }
    REQUIRE(prime_factors(n) == oracle);
  }
}

TEST_CASE("sums of two squares") {
  auto pairs = [](Natural n) {
    std::vector<std::pair<Natural, Natural>> out;
    for (const auto& r : two_squares(n)) out.emplace_back(r.a, r.b);
    return out;
  };
  using P = std::vector<std::pair<Natural, Natural>>;
  CHECK(pairs(5) == P{{2, 1}});
  CHECK(pairs(3).empty());
  CHECK(pairs(25) == P{{4, 3}, {5, 0}});
  CHECK(pairs(0) == P{{0, 0}});
  for (Natural n = 0; n < 3000; ++n) {
    P oracle;
    for (Natural a = 0; a * a <= n; ++a) {
      for (Natural b = 0; b <= a; ++b) {
        if (a * a + b * b == n) oracle.emplace_back(a, b);
      }
    }
    std::sort(oracle.begin(), oracle.end());
    P got = pairs(n);
    for (const auto& r : two_squares(n)) REQUIRE(r.n == n);
    std::sort(got.begin(), got.end());
    REQUIRE(got == oracle);
  }
}

TEST_CASE("primitive Pythagorean triples") {
  const auto check = [](Natural M, Natural N, PythagoreanTriple expected) {
    const PythagoreanTriple t = pythagorean_from(M, N);
    CHECK(t.leg1 == expected.leg1);
    CHECK(t.leg2 == expected.leg2);
    CHECK(t.hyp == expected.hyp);
  };
  check(2, 1, {4, 3, 5});
  check(3, 2, {12, 5, 13});
  check(4, 1, {8, 15, 17});

  const auto code = [](Natural M, Natural N) {
    try {
      pythagorean_from(M, N);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io;
  };
  CHECK(code(2, 0) == Errc::below_minimum);
  CHECK(code(2, 2) == Errc::not_ordered);
  CHECK(code(1, 2) == Errc::not_ordered);
  CHECK(code(6, 3) == Errc::not_coprime);
  CHECK(code(3, 1) == Errc::same_parity);

  for (Natural M = 2; M < 60; ++M) {
    for (Natural N = 1; N < M; ++N) {
      if (gcd(M, N) != 1 || (M - N) % 2 == 0) continue;
      const PythagoreanTriple t = pythagorean_from(M, N);
      REQUIRE(t.leg1 * t.leg1 + t.leg2 * t.leg2 == t.hyp * t.hyp);
      REQUIRE(gcd(gcd(t.leg1, t.leg2), t.hyp) == 1);
    }
  }
}

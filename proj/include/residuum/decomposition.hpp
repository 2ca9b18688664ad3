#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "residuum/integer.hpp"
#include "residuum/rational.hpp"
#include "residuum/report.hpp"

namespace residuum {

// Final-digit pattern of the two parts of an even M.
enum class DecompositionForm {
  form_33,  // (10k1 + 3) + (10k2 + 3)
  form_97,  // (10k1 + 9) + (10k2 + 7)
  form_5,   // 5 + (10k1 + 1)
};

const char* to_string(DecompositionForm f) noexcept;

/// One split M = M(a-b)/(2a) + M(a+b)/(2a) with a | M, gcd(a, b) = 1, a > b.
///
/// K = M/2 and alpha = Mb/(2a), so the parts are K -/+ alpha. The digit
/// indices k1, k2 depend on the form: form_33 indexes the low and high part,
/// form_97 indexes the part ending in 9 (k1) and the part ending in 7 (k2),
/// form_5 only has k1 for the part ending in 1. Unclassified records carry
/// no form and no indices.
struct DecompositionRecord {
  Natural M = 0;
  std::optional<DecompositionForm> form;
  Natural a = 0;
  Natural b = 0;
  Natural part_low = 0;
  Natural part_high = 0;
  Natural K = 0;
  Natural alpha = 0;
  std::optional<Natural> k1;
  std::optional<Natural> k2;
  bool both_prime = false;
};

/// Throws Errc::zero_input for M = 0 and Errc::odd_input for odd M.
void check_decomposable(Natural M);

/// Classifies the parts by final digit and fills k1/k2 accordingly.
void classify(DecompositionRecord& record);

/// Visits every admissible (a, b) of an even M in ascending (a, b) order.
/// `prime` answers primality for the both_prime flag (is_prime or a
/// PrimeSieve). With `half_divisor_only` only a = M/2 is visited.
template <class Primality, class Visitor>
void for_each_decomposition(Natural M, const Primality& prime, Visitor&& visit, bool half_divisor_only = false) {
  check_decomposable(M);
  std::vector<std::uint8_t> shares_factor;
  std::vector<Natural> candidates;
  if (half_divisor_only) {
    candidates.push_back(M / 2);
  } else {
    candidates = divisors(M);
  }
  for (Natural a : candidates) {
    if (a < 2) continue;
    const Natural q = M / a;
    // Parts are q(a -/+ b)/2, integral iff q is even or a - b is even.
    const bool q_even = q % 2 == 0;
    shares_factor.assign(a, 0);
    for (Natural p : prime_factors(a)) {
      for (Natural m = p; m < a; m += p) shares_factor[m] = 1;
    }
    for (Natural b = 1; b < a; ++b) {
      if (shares_factor[b]) continue;
      if (!q_even && (a - b) % 2 != 0) continue;
      DecompositionRecord r;
      r.M = M;
      r.a = a;
      r.b = b;
      r.part_low = narrow(static_cast<Wide>(q) * (a - b) / 2);
      r.part_high = narrow(static_cast<Wide>(q) * (a + b) / 2);
      r.K = M / 2;
      r.alpha = narrow(static_cast<Wide>(q) * b / 2);
      classify(r);
      r.both_prime = prime(r.part_low) && prime(r.part_high);
      visit(std::as_const(r));
    }
  }
}

/// All admissible decompositions of even M, ascending in (a, b).
std::vector<DecompositionRecord> theorem1_decompose(Natural M);

/// Brute-force oracle: every p <= q, both prime, p + q = M, ascending in p.
std::vector<std::pair<Natural, Natural>> prime_pair_oracle(Natural M);
std::vector<std::pair<Natural, Natural>> prime_pair_oracle(Natural M, const PrimeSieve& sieve);

/// With a = M/2 the parts are a -/+ b; checks that and compares the primality
/// of the parts with the primality of a -/+ b for every coprime b < a.
ClaimReport corollary1_check(Natural M);

struct Corollary2Candidate {
  Natural n;
  Natural alpha;

  friend bool operator==(const Corollary2Candidate&, const Corollary2Candidate&) = default;
};

/// n in [K^2, 2K^2] with n - K^2 = alpha^2 and gcd(K, n) = 1; alpha = 0 is kept.
std::vector<Corollary2Candidate> corollary2_candidates(Natural K);

/// {start, start + step, ..., last}; empty when count == 0.
struct Progression {
  Natural start = 0;
  Natural step = 10;
  Natural count = 0;

  bool empty() const noexcept { return count == 0; }
  Natural last() const noexcept { return start + (count - 1) * step; }
  bool contains(Natural v) const noexcept {
    return count > 0 && v >= start && v <= last() && (v - start) % step == 0;
  }
};

struct AlphaClassSet {
  Natural K = 0;
  unsigned K_ending = 0;
  std::vector<Progression> classes;

  bool contains(Natural alpha) const noexcept;
};

/// Offset classes for K ending in 8 or 3; throws Errc::bad_ending otherwise.
AlphaClassSet alpha_classes(Natural K);

/// Every prime pair (K - alpha, K + alpha) whose offset lies outside the
/// classes of alpha_classes(K).
ClaimReport alpha_class_check(Natural K);

struct ShiftResult {
  Natural K_new = 0;
  Natural alpha_new = 0;
  bool divisibility_ok = false;
  bool sum_ok = false;  // (K~ + a~) + (K~ - a~) == 2K + 10
};

/// Shift K -> K + 5 for K ending in 8. Throws Errc::bad_ending for other K
/// and Errc::outside_class when alpha0 is in neither class.
ShiftResult remark2_shift(Natural K, Natural alpha0);

/// Exact t2, r2 for an admissible (M, a, b) and the residuals of
///   (r2 + t2)(M^2/2 + 2 alpha^2) = M,  (t2 - r2)(M^2/2 + 2 alpha^2) = 2 alpha.
struct M14Identity {
  Natural alpha = 0;
  Rational t2;
  Rational r2;
  Rational residual_sum;
  Rational residual_diff;

  bool exact() const noexcept { return residual_sum.is_zero() && residual_diff.is_zero(); }
};

/// Throws Errc::not_divisor, not_coprime, not_ordered or non_integral.
M14Identity m14_identity(Natural M, Natural a, Natural b);
ClaimReport identity_m14_check(Natural M, Natural a, Natural b);

/// lambda2 = M / (M^2/2 + 2 alpha^2) = m/n in lowest terms; checks
/// (Mm - n)^2 = n^2 - 4 alpha^2 m^2 exactly.
bool m7_consistent(Natural M, Natural alpha);

}  // namespace residuum

#include "residuum/decomposition.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace residuum {

const char* to_string(DecompositionForm f) noexcept {
  switch (f) {
    case DecompositionForm::form_33: return "FORM_33";
    case DecompositionForm::form_97: return "FORM_97";
    case DecompositionForm::form_5: return "FORM_5";
  }
  return "UNCLASSIFIED";
}

void check_decomposable(Natural M) {
  if (M == 0) throw Error(Errc::zero_input, "M must be positive");
  if (M % 2 != 0) throw Error(Errc::odd_input, "M must be even");
}

void classify(DecompositionRecord& r) {
  const Natural lo = r.part_low % 10;
  const Natural hi = r.part_high % 10;
  r.form.reset();
  r.k1.reset();
  r.k2.reset();
  if (lo == 3 && hi == 3) {
    r.form = DecompositionForm::form_33;
    r.k1 = (r.part_low - 3) / 10;
    r.k2 = (r.part_high - 3) / 10;
  } else if ((lo == 9 && hi == 7) || (lo == 7 && hi == 9)) {
    // Of the two index assignments only the one matching the actual endings
    // is integral; k1 always indexes the part ending in 9.
    const Natural nine = lo == 9 ? r.part_low : r.part_high;
    const Natural seven = lo == 9 ? r.part_high : r.part_low;
    r.form = DecompositionForm::form_97;
    r.k1 = (nine - 9) / 10;
    r.k2 = (seven - 7) / 10;
  } else if (r.part_low == 5 && hi == 1) {
    r.form = DecompositionForm::form_5;
    r.k1 = (r.part_high - 1) / 10;
  } else if (r.part_high == 5 && lo == 1) {
    r.form = DecompositionForm::form_5;
    r.k1 = (r.part_low - 1) / 10;
  }
}

std::vector<DecompositionRecord> theorem1_decompose(Natural M) {
  std::vector<DecompositionRecord> out;
  for_each_decomposition(M, is_prime, [&](const DecompositionRecord& r) { out.push_back(r); });
  return out;
}

std::vector<std::pair<Natural, Natural>> prime_pair_oracle(Natural M, const PrimeSieve& sieve) {
  std::vector<std::pair<Natural, Natural>> pairs;
  for (Natural p = 2; p <= M / 2; ++p) {
    if (sieve(p) && sieve(M - p)) pairs.emplace_back(p, M - p);
  }
  return pairs;
}

std::vector<std::pair<Natural, Natural>> prime_pair_oracle(Natural M) {
  return prime_pair_oracle(M, PrimeSieve(M));
}

ClaimReport corollary1_check(Natural M) {
  check_decomposable(M);
  if (M < 6) throw Error(Errc::below_minimum, "corollary1_check requires M >= 6");
  const Natural a = M / 2;
  Tally t;
  for (Natural b = 1; b < a; ++b) {
    if (gcd(a, b) != 1) continue;
    ++t.tested;
    const Natural low = narrow(static_cast<Wide>(M) * (a - b) / (2 * a));
    const Natural high = narrow(static_cast<Wide>(M) * (a + b) / (2 * a));
    const bool parts_prime = is_prime(low) && is_prime(high);
    const bool ab_prime = is_prime(a - b) && is_prime(a + b);
    t.add("both_prime", parts_prime ? 1 : 0);
    if (low != a - b || high != a + b || parts_prime != ab_prime) {
      t.violation(Json{{"M", M}, {"a", a}, {"b", b}, {"part_low", low}, {"part_high", high},
                       {"parts_prime", parts_prime}, {"a_pm_b_prime", ab_prime}});
    }
  }
  return make_report("cor1-biconditional", "prime parts iff a-b and a+b prime when 2a = M",
                     "M=" + std::to_string(M), std::move(t));
}

std::vector<Corollary2Candidate> corollary2_candidates(Natural K) {
  if (K < 1) throw Error(Errc::below_minimum, "corollary2_candidates requires K >= 1");
  const Natural K2 = checked_mul(K, K);
  std::vector<Corollary2Candidate> out;
  for (Natural alpha = 0; alpha <= K; ++alpha) {
    const Natural n = checked_add(K2, alpha * alpha);
    if (gcd(K, n) == 1) out.push_back({n, alpha});
  }
  return out;
}

bool AlphaClassSet::contains(Natural alpha) const noexcept {
  for (const auto& c : classes) {
    if (c.contains(alpha)) return true;
  }
  return false;
}

namespace {

Progression progression_to(Natural start, Natural K, Natural offset) {
  Progression p;
  p.start = start;
  if (K >= offset && K - offset >= start) p.count = (K - offset - start) / 10 + 1;
  return p;
}

}  // namespace

AlphaClassSet alpha_classes(Natural K) {
  AlphaClassSet s;
  s.K = K;
  s.K_ending = static_cast<unsigned>(K % 10);
  if (s.K_ending == 8) {
    s.classes = {progression_to(1, K, 7), progression_to(5, K, 3)};
  } else if (s.K_ending == 3) {
    s.classes = {progression_to(0, K, 3), progression_to(6, K, 7)};
  } else {
    throw Error(Errc::bad_ending, "alpha classes are defined for K ending in 8 or 3, got K=" + std::to_string(K));
  }
  return s;
}

ClaimReport alpha_class_check(Natural K) {
  const AlphaClassSet classes = alpha_classes(K);
  Tally t;
  for (const auto& [p, q] : prime_pair_oracle(checked_mul(2, K))) {
    const Natural alpha = K - p;
    ++t.tested;
    if (classes.contains(alpha)) {
      t.add("in_class", 1);
    } else {
      t.violation(Json{{"K", K}, {"alpha", alpha}, {"p", p}, {"q", q}});
    }
  }
  return make_report("cor3-classes", "prime-pair offsets lie in the mod-10 alpha classes",
                     "K=" + std::to_string(K), std::move(t));
}

ShiftResult remark2_shift(Natural K, Natural alpha0) {
  if (K % 10 != 8) throw Error(Errc::bad_ending, "remark2_shift requires K ending in 8");
  const AlphaClassSet classes = alpha_classes(K);
  ShiftResult r;
  r.K_new = checked_add(K, 5);
  Wide witness;
  if (classes.classes[0].contains(alpha0)) {
    r.alpha_new = alpha0 - 1;
    witness = static_cast<Wide>(K) + alpha0 + 1;
  } else if (classes.classes[1].contains(alpha0)) {
    r.alpha_new = alpha0 + 1;
    witness = static_cast<Wide>(K) + alpha0 - 3;
  } else {
    throw Error(Errc::outside_class, "alpha0=" + std::to_string(alpha0) + " is in neither class of K=" +
                                         std::to_string(K));
  }
  r.divisibility_ok = witness * witness % 50 == 0;
  const Wide sum = (static_cast<Wide>(r.K_new) + r.alpha_new) + (static_cast<Wide>(r.K_new) - r.alpha_new);
  r.sum_ok = sum == static_cast<Wide>(2) * K + 10;
  return r;
}

namespace {

Integer as_integer(Natural v) {
  if (v > static_cast<Natural>(std::numeric_limits<Integer>::max()))
    throw Error(Errc::overflow, "value exceeds signed 64-bit range");
  return static_cast<Integer>(v);
}

}  // namespace

M14Identity m14_identity(Natural M, Natural a, Natural b) {
  if (a == 0 || M % a != 0) throw Error(Errc::not_divisor, "a must divide M");
  if (b == 0) throw Error(Errc::below_minimum, "b must be >= 1");
  if (a <= b) throw Error(Errc::not_ordered, "a must exceed b");
  if (gcd(a, b) != 1) throw Error(Errc::not_coprime, "a and b must be coprime");
  if (static_cast<Wide>(M) * b % (2 * static_cast<Wide>(a)) != 0)
    throw Error(Errc::non_integral, "alpha = Mb/(2a) is not an integer");

  M14Identity id;
  id.alpha = narrow(static_cast<Wide>(M) * b / (2 * a));
  const Natural norm = checked_add(checked_mul(a, a), checked_mul(b, b));
  const Integer den = as_integer(checked_mul(M, norm));
  id.t2 = Rational(as_integer(checked_mul(a, a + b)), den);
  id.r2 = Rational(as_integer(checked_mul(a, a - b)), den);
  const Rational scale =
      Rational(as_integer(checked_mul(M, M)), 2) + Rational(as_integer(checked_mul(2, checked_mul(id.alpha, id.alpha))));
  id.residual_sum = (id.r2 + id.t2) * scale - Rational(as_integer(M));
  id.residual_diff = (id.t2 - id.r2) * scale - Rational(as_integer(checked_mul(2, id.alpha)));
  return id;
}

ClaimReport identity_m14_check(Natural M, Natural a, Natural b) {
  const M14Identity id = m14_identity(M, a, b);
  Tally t;
  t.tested = 1;
  t.add("alpha", static_cast<double>(id.alpha));
  t.max("abs_residual_sum", std::abs(id.residual_sum.to_double()));
  t.max("abs_residual_diff", std::abs(id.residual_diff.to_double()));
  if (!id.exact()) {
    t.violation(Json{{"M", M}, {"a", a}, {"b", b}, {"t2", id.t2.str()}, {"r2", id.r2.str()},
                     {"residual_sum", id.residual_sum.str()}, {"residual_diff", id.residual_diff.str()}});
  }
  return make_report("m14-identity", "exact t2/r2 projection identities",
                     "M=" + std::to_string(M) + " a=" + std::to_string(a) + " b=" + std::to_string(b), std::move(t));
}

bool m7_consistent(Natural M, Natural alpha) {
  const Rational scale =
      Rational(as_integer(checked_mul(M, M)), 2) + Rational(as_integer(checked_mul(2, checked_mul(alpha, alpha))));
  const Rational lambda2 = Rational(as_integer(M)) / scale;
  const SignedWide m = lambda2.num();
  const SignedWide n = lambda2.den();
  const SignedWide lhs = (static_cast<SignedWide>(M) * m - n) * (static_cast<SignedWide>(M) * m - n);
  const SignedWide rhs = n * n - 4 * static_cast<SignedWide>(alpha) * alpha * m * m;
  return lhs == rhs;
}

}  // namespace residuum

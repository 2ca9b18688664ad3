#include "residuum/factor_bounds.hpp"

#include <cmath>
#include <string>

namespace residuum {

const char* to_string(FactorFamily f) noexcept {
  switch (f) {
    case FactorFamily::f79: return "F79";
    case FactorFamily::f31: return "F31";
  }
  return "unknown";
}

Wide FactorForm::reconstruct() const noexcept {
  if (form == FactorFamily::f79) return (static_cast<Wide>(10) * A + 7) * (static_cast<Wide>(10) * B + 9);
  return (static_cast<Wide>(10) * A + 3) * (static_cast<Wide>(10) * B + 1);
}

std::vector<FactorForm> factor_forms(Natural N) {
  if (N % 10 != 3) throw Error(Errc::bad_ending, "factor_forms requires N ending in 3, got " + std::to_string(N));
  std::vector<FactorForm> out;
  for (Natural d : divisors(N)) {
    const Natural e = N / d;
    if (d % 10 == 7) {
      out.push_back({N, FactorFamily::f79, (d - 7) / 10, (e - 9) / 10});
    } else if (d % 10 == 3 && e > 1) {
      out.push_back({N, FactorFamily::f31, (d - 3) / 10, (e - 1) / 10});
    }
  }
  return out;
}

std::optional<bool> bound_satisfied_exact(const FactorForm& ff) {
  const SignedWide N = ff.N;
  const SignedWide s = static_cast<SignedWide>(ff.A) + ff.B;
  if (ff.form == FactorFamily::f79) {
    if (N < 34) return std::nullopt;
    // 5s + 7 >= sqrt(N - 2 sqrt N)  <=>  2 sqrt N >= N - (5s + 7)^2
    const SignedWide gap = N - (5 * s + 7) * (5 * s + 7);
    const bool lower_ok = gap <= 0 || 4 * N >= gap * gap;
    // 5s + 14 <= 2 sqrt(N - 34)
    const bool upper_ok = (5 * s + 14) * (5 * s + 14) <= 4 * (N - 34);
    return lower_ok && upper_ok;
  }
  if (N < 2) return std::nullopt;
  // 13 (5s + 1)^2 >= 11 N  and  (5s + 2)^2 <= 4 (N - 2)
  const bool lower_ok = 13 * (5 * s + 1) * (5 * s + 1) >= 11 * N;
  const bool upper_ok = (5 * s + 2) * (5 * s + 2) <= 4 * (N - 2);
  return lower_ok && upper_ok;
}

namespace {

// Half-width used to widen long-double bound evaluations outward. The
// expressions involve at most two nested square roots, so the true error is
// many orders of magnitude below this.
long double slack(long double v) { return 1e-12L * (1.0L + std::fabs(v)); }

}  // namespace

BoundCheck bound_check(const FactorForm& ff) {
  BoundCheck bc;
  bc.factor_form = ff;
  bc.k1 = (ff.N - 3) / 10;
  bc.sum_AB = ff.A + ff.B;

  const auto N = static_cast<long double>(ff.N);
  const auto k1 = static_cast<long double>(bc.k1);
  long double lower = 0, upper = 0;
  bool defined = true;
  if (ff.form == FactorFamily::f79) {
    const long double inner = N - 2.0L * std::sqrt(N);
    const long double outer = 10.0L * k1 - 31.0L;
    defined = inner >= 0 && outer >= 0;
    if (defined) {
      lower = (std::sqrt(inner) - 7.0L) / 5.0L;
      upper = 2.0L * (std::sqrt(outer) - 7.0L) / 5.0L;
    }
  } else {
    const long double inner = (110.0L * k1 + 33.0L) / 13.0L;
    const long double outer = 10.0L * k1 + 1.0L;
    defined = inner >= 0 && outer >= 0;
    if (defined) {
      lower = (std::sqrt(inner) - 1.0L) / 5.0L;
      upper = 2.0L * (std::sqrt(outer) - 1.0L) / 5.0L;
    }
  }

  const auto exact = bound_satisfied_exact(ff);
  bc.defined = defined && exact.has_value();
  if (!bc.defined) return bc;
  bc.lower = static_cast<double>(lower);
  bc.upper = static_cast<double>(upper);

  const auto s = static_cast<long double>(bc.sum_AB);
  if (s >= lower + slack(lower) && s <= upper - slack(upper)) {
    bc.float_verdict = true;
  } else if (s < lower - slack(lower) || s > upper + slack(upper)) {
    bc.float_verdict = false;
  }
  bc.satisfied = *exact;
  return bc;
}

Tally bounds_one(Natural N, bool composite) {
  Tally t;
  if (N % 10 != 3 || !composite) return t;
  t.add("composites", 1);
  for (const auto& ff : factor_forms(N)) {
    const std::string fam = to_string(ff.form);
    if (ff.reconstruct() != N) {
      t.violation(Json{{"N", N}, {"form", fam}, {"A", ff.A}, {"B", ff.B}, {"reconstruction_failed", true}});
      continue;
    }
    const BoundCheck bc = bound_check(ff);
    ++t.tested;
    if (!bc.defined) {
      ++t.undefined;
      t.add(fam + "_undefined", 1);
      continue;
    }
    t.add(fam + "_tested", 1);
    if (!bc.float_verdict) {
      t.add("float_undecided", 1);
    } else if (*bc.float_verdict != bc.satisfied) {
      t.add("float_exact_mismatches", 1);
    }
    if (bc.satisfied) {
      t.add(fam + "_satisfied", 1);
    } else {
      t.violation(Json{{"N", N}, {"form", fam}, {"A", ff.A}, {"B", ff.B}, {"k1", bc.k1},
                       {"sum_AB", bc.sum_AB}, {"lower", bc.lower}, {"upper", bc.upper}});
    }
  }
  return t;
}

void add_bound_rates(ClaimReport& report) {
  for (const char* fam : {"F79", "F31"}) {
    const std::string f = fam;
    const double tested = report.stats.count(f + "_tested") ? report.stats.at(f + "_tested") : 0.0;
    const double ok = report.stats.count(f + "_satisfied") ? report.stats.at(f + "_satisfied") : 0.0;
    report.stats[f + "_satisfaction_rate"] = tested > 0 ? ok / tested : 0.0;
  }
  report.stats.try_emplace("float_exact_mismatches", 0.0);
}

ClaimReport bounds_sweep(Natural N_max) {
  if (N_max < 13) throw Error(Errc::below_minimum, "bounds_sweep requires N_max >= 13");
  const PrimeSieve sieve(N_max);
  Tally total;
  for (Natural N = 13; N <= N_max; N += 10) total.merge(bounds_one(N, !sieve(N)));
  ClaimReport r = make_report("rem3-bounds", "A+B bounds for factorizations of numbers ending in 3",
                              "13<=N<=" + std::to_string(N_max), std::move(total));
  add_bound_rates(r);
  return r;
}

}  // namespace residuum

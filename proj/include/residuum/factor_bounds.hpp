#pragma once

#include <optional>
#include <vector>

#include "residuum/integer.hpp"
#include "residuum/report.hpp"

namespace residuum {

enum class FactorFamily {
  f79,  // (10A + 7)(10B + 9)
  f31,  // (10A + 3)(10B + 1)
};

const char* to_string(FactorFamily f) noexcept;

struct FactorForm {
  Natural N = 0;
  FactorFamily form = FactorFamily::f79;
  Natural A = 0;
  Natural B = 0;

  Wide reconstruct() const noexcept;

  friend bool operator==(const FactorForm&, const FactorForm&) = default;
};

/// Every non-trivial factorization of N (N ending in 3) matching one of the
/// two families, ordered by the first factor. Throws Errc::bad_ending.
std::vector<FactorForm> factor_forms(Natural N);

/// Bounds on A + B with k1 = (N - 3)/10:
///   f79: (sqrt(N - 2 sqrt N) - 7)/5  <=  A+B  <=  2 (sqrt(10 k1 - 31) - 7)/5
///   f31: (sqrt((110 k1 + 33)/13) - 1)/5  <=  A+B  <=  2 (sqrt(10 k1 + 1) - 1)/5
struct BoundCheck {
  FactorForm factor_form;
  Natural k1 = 0;
  double lower = 0.0;
  double upper = 0.0;
  Natural sum_AB = 0;
  bool defined = true;     // false when a radicand is negative
  bool satisfied = false;  // decided by the exact path
  // Floating verdict with outward-widened bounds, absent when the widened
  // interval straddles A + B.
  std::optional<bool> float_verdict;
};

/// Exact verdict via squared integer comparisons; nullopt when undefined.
std::optional<bool> bound_satisfied_exact(const FactorForm& ff);

BoundCheck bound_check(const FactorForm& ff);

/// Partial result of the sweep for a single N; exposed for partitioning.
Tally bounds_one(Natural N, bool composite);

/// All composite N = 3 (mod 10), 13 <= N <= N_max.
ClaimReport bounds_sweep(Natural N_max);

/// Adds per-family satisfaction rates to a finished bounds report.
void add_bound_rates(ClaimReport& report);

}  // namespace residuum

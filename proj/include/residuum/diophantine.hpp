#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "residuum/integer.hpp"
#include "residuum/rational.hpp"
#include "residuum/report.hpp"

namespace residuum {

struct CirclePoint {
  Integer x = 0;
  Integer y = 0;

  friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;
};

/// All integer (x, y) with (x-n)^2 + (y-n)^2 = 2n^2, sorted lexicographically.
/// Built from two_squares(2n^2) by expanding signs and swapping coordinates.
std::vector<CirclePoint> circle_solve(Natural n);

std::vector<CirclePoint> nonnegative_only(const std::vector<CirclePoint>& points);

/// Number of lattice points on a circle of squared radius r2 from the prime
/// factorization: 4 * prod over p = 1 (mod 4) of (e + 1), zero if some
/// p = 3 (mod 4) appears to an odd power.
Natural lattice_point_count(Natural r2);

/// Tabulates |circle_solve(n)| against primality for 1 <= n <= n_max.
/// Violations are only raised when the solution count disagrees with the
/// factorization count or with the row-scan oracle; the primality
/// correspondence is reported as a contingency table in the stats.
ClaimReport circle_primality_probe(Natural n_max);

/// Tally for one n of the probe; exposed for sweep partitioning.
Tally circle_probe_one(Natural n);

struct FermatCase {
  Natural M = 0;
  Natural N = 0;
  Natural m = 0;            // M^2 + N^2
  Integer rhs_minus_m = 0;  // C^{2n} - m = M^2 - N^2
  Natural C2n = 0;          // 2 M^2
  bool is_perfect_square_double = false;
  bool pythagorean_identity = false;
  // Legs swapped: C^{2n} - m = 2MN, so C^{2n} = (M + N)^2.
  Natural swapped_C2n = 0;
  bool swapped_is_perfect_square = false;
};

/// Throws the pythagorean_from precondition codes.
FermatCase fermat_pipeline(Natural M, Natural N);

enum class SplitStatus { ok, negative_radicand, irrational_root };

const char* to_string(SplitStatus s) noexcept;

struct PowerSplit {
  SplitStatus status = SplitStatus::ok;
  std::optional<std::pair<Rational, Rational>> powers;  // (A^n, B^n)
  bool sum_matches = false;       // A^n + B^n == C^n
  bool weighted_identity = false; // C^n == lambda2 (A^{2n} + B^{2n})
};

/// A^n, B^n = C^n/2 +/- sqrt(C^n/(2 lambda2) - C^{2n}/4), evaluated exactly.
/// Throws Errc::domain unless lambda2 > 0.
PowerSplit eq_ej3_4_split(Natural C_pow_n, const Rational& lambda2);

}  // namespace residuum

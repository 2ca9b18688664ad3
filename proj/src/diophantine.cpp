#include "residuum/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace residuum {

std::vector<CirclePoint> circle_solve(Natural n) {
  if (n < 1) throw Error(Errc::below_minimum, "circle_solve requires n >= 1");
  const Natural r2 = checked_mul(2, checked_mul(n, n));
  if (r2 > static_cast<Natural>(std::numeric_limits<Integer>::max()) / 4)
    throw Error(Errc::overflow, "circle radius exceeds signed coordinate range");
  const auto center = static_cast<Integer>(n);
  std::vector<CirclePoint> points;
  for (const auto& rep : two_squares(r2)) {
    const auto a = static_cast<Integer>(rep.a);
    const auto b = static_cast<Integer>(rep.b);
    for (Integer sa : {-1, 1}) {
      for (Integer sb : {-1, 1}) {
        points.push_back({center + sa * a, center + sb * b});
        points.push_back({center + sb * b, center + sa * a});
      }
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<CirclePoint> nonnegative_only(const std::vector<CirclePoint>& points) {
  std::vector<CirclePoint> out;
  std::copy_if(points.begin(), points.end(), std::back_inserter(out),
               [](const CirclePoint& p) { return p.x >= 0 && p.y >= 0; });
  return out;
}

Natural lattice_point_count(Natural r2) {
  if (r2 == 0) return 1;
  Natural count = 4;
  for (Natural p = 2; p <= r2 / p; ++p) {
    if (r2 % p != 0) continue;
    Natural e = 0;
    while (r2 % p == 0) {
      r2 /= p;
      ++e;
    }
    if (p % 4 == 1) count *= e + 1;
    if (p % 4 == 3 && e % 2 == 1) return 0;
  }
  if (r2 > 1) {
    if (r2 % 4 == 1) count *= 2;
    if (r2 % 4 == 3) return 0;
  }
  return count;
}

namespace {

bool has_factor_one_mod_four(Natural n) {
  for (Natural p : prime_factors(n)) {
    if (p % 4 == 1) return true;
  }
  return false;
}

}  // namespace

Tally circle_probe_one(Natural n) {
  Tally t;
  t.tested = 1;
  const auto points = circle_solve(n);
  const auto count = static_cast<Natural>(points.size());
  const bool prime = is_prime(n);
  const bool four = count == 4;
  const bool p1 = has_factor_one_mod_four(n);
  const auto in = [&](Integer x, Integer y) { return std::binary_search(points.begin(), points.end(), CirclePoint{x, y}); };
  const auto two_n = static_cast<Integer>(2 * n);
  const bool trivial = in(0, 0) && in(0, two_n) && in(two_n, 0) && in(two_n, two_n);

  t.add(std::string(prime ? "prime" : "nonprime") + (four ? "_with_4_solutions" : "_with_more_solutions"), 1);
  t.add(std::string(p1 ? "has_p1mod4_factor" : "no_p1mod4_factor") + (four ? "_with_4_solutions" : "_with_more_solutions"), 1);
  t.add("solutions_total", static_cast<double>(count));
  t.add("nonnegative_solutions_total", static_cast<double>(nonnegative_only(points).size()));
  t.max("max_solutions", static_cast<double>(count));

  const Natural expected = lattice_point_count(2 * n * n);
  if (count != expected || count % 4 != 0 || !trivial || four == p1) {
    t.violation(Json{{"n", n}, {"solutions", count}, {"lattice_count", expected}, {"trivial_points", trivial},
                     {"has_p1mod4_factor", p1}, {"is_prime", prime}});
  }
  return t;
}

ClaimReport circle_primality_probe(Natural n_max) {
  if (n_max < 2) throw Error(Errc::below_minimum, "circle_primality_probe requires n_max >= 2");
  Tally total;
  for (Natural n = 1; n <= n_max; ++n) total.merge(circle_probe_one(n));
  return make_report("rem1-circle", "primality vs integer points of (x-n)^2+(y-n)^2=2n^2",
                     "1<=n<=" + std::to_string(n_max), std::move(total));
}

FermatCase fermat_pipeline(Natural M, Natural N) {
  check_primitive_generator(M, N);
  FermatCase c;
  c.M = M;
  c.N = N;
  const Natural mm = checked_mul(M, M);
  const Natural nn = checked_mul(N, N);
  c.m = checked_add(mm, nn);
  c.rhs_minus_m = static_cast<Integer>(mm - nn);
  c.C2n = checked_mul(2, mm);
  c.is_perfect_square_double = is_square(c.C2n);

  const Wide leg1 = static_cast<Wide>(2) * M * N;
  const Wide leg2 = mm - nn;
  const Wide hyp = c.m;
  c.pythagorean_identity = leg1 * leg1 + leg2 * leg2 == hyp * hyp;

  c.swapped_C2n = narrow(static_cast<Wide>(c.m) + leg1);
  c.swapped_is_perfect_square = is_square(c.swapped_C2n);
  return c;
}

const char* to_string(SplitStatus s) noexcept {
  switch (s) {
    case SplitStatus::ok: return "ok";
    case SplitStatus::negative_radicand: return "negative_radicand";
    case SplitStatus::irrational_root: return "irrational_root";
  }
  return "unknown";
}

PowerSplit eq_ej3_4_split(Natural C_pow_n, const Rational& lambda2) {
  if (lambda2.sign() <= 0) throw Error(Errc::domain, "lambda2 must be positive");
  if (C_pow_n > static_cast<Natural>(std::numeric_limits<Integer>::max()))
    throw Error(Errc::overflow, "C^n exceeds signed 64-bit range");
  const Rational c(static_cast<Integer>(C_pow_n));
  const Rational half = c / Rational(2);
  const Rational radicand = c / (Rational(2) * lambda2) - c * c / Rational(4);

  PowerSplit out;
  if (radicand.sign() < 0) {
    out.status = SplitStatus::negative_radicand;
    return out;
  }
  const auto root = radicand.sqrt();
  if (!root) {
    out.status = SplitStatus::irrational_root;
    return out;
  }
  const Rational a = half + *root;
  const Rational b = half - *root;
  out.powers = std::make_pair(a, b);
  out.sum_matches = a + b == c;
  out.weighted_identity = lambda2 * (a * a + b * b) == c;
  return out;
}

}  // namespace residuum

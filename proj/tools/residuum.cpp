#include <cmath>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "residuum/decomposition.hpp"
#include "residuum/diophantine.hpp"
#include "residuum/factor_bounds.hpp"
#include "residuum/harness.hpp"
#include "residuum/ode.hpp"
#include "residuum/pde.hpp"

using namespace residuum;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolations = 2;

int print(const Json& j) {
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int print_report(const ClaimReport& r) {
  std::cout << render_json(r);
  return r.violations.empty() ? kOk : kViolations;
}

Json nullable(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

Json record_json(const DecompositionRecord& r) {
  Json j{{"a", r.a}, {"b", r.b}, {"part_low", r.part_low}, {"part_high", r.part_high}, {"K", r.K}, {"alpha", r.alpha}};
  j["form"] = r.form ? Json(to_string(*r.form)) : Json(nullptr);
  j["k1"] = r.k1 ? Json(*r.k1) : Json(nullptr);
  j["k2"] = r.k2 ? Json(*r.k2) : Json(nullptr);
  j["both_prime"] = r.both_prime;
  return j;
}

int cmd_decompose(Natural M, bool primes_only) {
  Json records = Json::array();
  for (const auto& r : theorem1_decompose(M)) {
    if (!primes_only || r.both_prime) records.push_back(record_json(r));
  }
  return print(Json{{"M", M}, {"records", records}});
}

int cmd_goldbach(Natural M) {
  Json pairs = Json::array();
  for (const auto& [p, q] : prime_pair_oracle(M)) pairs.push_back({p, q});
  return print(Json{{"M", M}, {"pairs", pairs}});
}

int cmd_alpha_check(Natural K) {
  const AlphaClassSet set = alpha_classes(K);
  Json classes = Json::array();
  for (const auto& c : set.classes) classes.push_back({{"start", c.start}, {"step", c.step}, {"last", c.last()}});
  ClaimReport report = alpha_class_check(K);
  Json out = to_json(report);
  out["classes"] = classes;
  std::cout << out.dump(2) << '\n';
  return report.violations.empty() ? kOk : kViolations;
}

int cmd_circle(Natural n, bool nonnegative) {
  auto points = circle_solve(n);
  if (nonnegative) points = nonnegative_only(points);
  Json list = Json::array();
  for (const auto& p : points) list.push_back({p.x, p.y});
  return print(Json{{"n", n}, {"count", points.size()}, {"points", list}});
}

int cmd_two_squares(Natural n) {
  Json reps = Json::array();
  for (const auto& r : two_squares(n)) reps.push_back({r.a, r.b});
  return print(Json{{"n", n}, {"representations", reps}});
}

int cmd_fermat(Natural M, Natural N) {
  const FermatCase c = fermat_pipeline(M, N);
  return print(Json{{"M", c.M},
                    {"N", c.N},
                    {"m", c.m},
                    {"rhs_minus_m", c.rhs_minus_m},
                    {"C2n", c.C2n},
                    {"is_perfect_square_double", c.is_perfect_square_double},
                    {"pythagorean_identity", c.pythagorean_identity},
                    {"swapped_C2n", c.swapped_C2n},
                    {"swapped_is_perfect_square", c.swapped_is_perfect_square}});
}

int cmd_factor_bounds(Natural N) {
  Json forms = Json::array();
  for (const auto& ff : factor_forms(N)) {
    const BoundCheck b = bound_check(ff);
    Json j{{"form", to_string(ff.form)}, {"A", ff.A}, {"B", ff.B}, {"k1", b.k1}, {"sum_AB", b.sum_AB},
           {"lower", nullable(b.lower)}, {"upper", nullable(b.upper)}, {"defined", b.defined},
           {"satisfied", b.satisfied}};
    j["float_verdict"] = b.float_verdict ? Json(*b.float_verdict) : Json(nullptr);
    forms.push_back(std::move(j));
  }
  return print(Json{{"N", N}, {"forms", forms}});
}

struct OdeArgs {
  double alpha = 1.0, beta = 0.0, ell = 1.0, t_end = 0.4, step = 1e-4;
  std::string b = "1", c = "1";
};

int cmd_ode(const OdeArgs& a) {
  const OdeWitness w =
      ode_construct(a.alpha, a.beta, a.ell, parse_coefficient(a.b), parse_coefficient(a.c), a.t_end, a.step);
  const double residual = ode_verify(w);
  return print(Json{{"b", w.b.str()},
                    {"c", w.c.str()},
                    {"ell", w.ell},
                    {"t_end", w.t_end},
                    {"step", w.step},
                    {"steps", w.steps},
                    {"x_end", w.x_values(w.x_values.size() - 1)},
                    {"max_relative_residual", residual},
                    {"closed_form_G_error", nullable(w.closed_form_G_error)}});
}

int cmd_poisson(const std::string& mode, Natural n) {
  const int q = mode == "sym" ? 1 : 2;
  const PoissonSplitReport r = poisson_split_check(sine_product(1, q, static_cast<Eigen::Index>(n)));
  return print(Json{{"mode", mode},
                    {"p", 1},
                    {"q", q},
                    {"n", n},
                    {"max_split_residual", r.max_split_residual},
                    {"max_asymmetry", r.max_asymmetry},
                    {"asymmetry_integral", r.asymmetry_integral},
                    {"max_abs_f", r.max_abs_f},
                    {"max_abs_u", r.max_abs_u},
                    {"split_holds", r.max_split_residual <= 0.01 * r.max_abs_f}});
}

int cmd_membrane(double L, int k, Natural n) {
  const auto [mode, grid] = membrane_modes(L, k, 1.0, static_cast<Eigen::Index>(n));
  return print(Json{{"L", mode.L},
                    {"k", mode.k},
                    {"n", n},
                    {"lambda", mode.lambda},
                    {"residual", membrane_residual(mode, grid)},
                    {"boundary_abs", grid.max_boundary_abs()}});
}

int cmd_sweep(SweepConfig cfg, const std::string& out) {
  const char* ext = cfg.format == ReportFormat::json ? ".json" : ".csv";
  cfg.output_path = out.empty() ? default_output_dir() / (cfg.claim_id + ext) : std::filesystem::path(out);
  const ClaimReport r = run_claim(cfg);
  std::cout << r.claim_id << ": " << to_string(r.verdict()) << " tested=" << r.tested
            << " violations=" << r.violations.size() << " undefined=" << r.undefined << " -> "
            << cfg.output_path.string() << '\n';
  return r.violations.empty() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable checks for additive decompositions of even numbers"};
  app.require_subcommand(1);

  Natural M = 0, N = 0, K = 0, n = 0;
  bool primes_only = false, nonnegative = false;

  auto* decompose = app.add_subcommand("decompose", "All decompositions of an even M");
  decompose->add_option("M", M)->required();
  decompose->add_flag("--primes-only", primes_only, "Keep records whose parts are both prime");

  auto* goldbach = app.add_subcommand("goldbach", "Prime pairs p + q = M with p <= q");
  goldbach->add_option("M", M)->required();

  auto* alpha = app.add_subcommand("alpha-check", "Offset classes for K ending in 3 or 8");
  alpha->add_option("K", K)->required();

  auto* circle = app.add_subcommand("circle", "Integer points of (x-n)^2 + (y-n)^2 = 2n^2");
  circle->add_option("n", n)->required();
  circle->add_flag("--nonnegative", nonnegative, "Keep points with x, y >= 0");

  auto* squares = app.add_subcommand("two-squares", "Representations n = a^2 + b^2, a >= b >= 0");
  squares->add_option("n", n)->required();

  auto* fermat = app.add_subcommand("fermat", "Substitution pipeline for a primitive pair (M, N)");
  fermat->add_option("M", M)->required();
  fermat->add_option("N", N)->required();

  Natural sweep_max = 0;
  auto* bounds = app.add_subcommand("factor-bounds", "A+B bounds for N ending in 3");
  auto* bounds_n = bounds->add_option("N", N);
  auto* bounds_sweep = bounds->add_option("--sweep", sweep_max, "Sweep composites up to N_max");
  bounds_n->excludes(bounds_sweep);
  bounds->require_option(1);

  OdeArgs ode;
  auto* ode_cmd = app.add_subcommand("ode-verify", "Construct and re-integrate x'' + b x' + c x = y");
  ode_cmd->add_option("--alpha", ode.alpha, "x(0)")->capture_default_str();
  ode_cmd->add_option("--beta", ode.beta, "x'(0)")->capture_default_str();
  ode_cmd->add_option("--ell", ode.ell, "Period parameter")->capture_default_str();
  ode_cmd->add_option("--b", ode.b, "Coefficient b(t)")->capture_default_str();
  ode_cmd->add_option("--c", ode.c, "Coefficient c(t)")->capture_default_str();
  ode_cmd->add_option("--t-end", ode.t_end, "End of interval")->capture_default_str();
  ode_cmd->add_option("--step", ode.step, "Integrator step")->capture_default_str();

  std::string mode = "sym";
  Natural grid_n = 101;
  auto* poisson = app.add_subcommand("poisson-check", "Split residual for sin(pi x) sin(q pi y)");
  poisson->add_option("--mode", mode)->check(CLI::IsMember({"sym", "asym"}))->capture_default_str();
  poisson->add_option("--n", grid_n, "Nodes per axis")->capture_default_str();

  double L = 1.0;
  int k = 1;
  auto* membrane = app.add_subcommand("membrane", "Eigenmode residual on [-L, L]^2");
  membrane->add_option("--L", L)->capture_default_str();
  membrane->add_option("--k", k)->check(CLI::PositiveNumber)->capture_default_str();
  membrane->add_option("--n", grid_n, "Nodes per axis")->capture_default_str();

  SweepConfig cfg;
  std::string out, format = "json";
  auto* sweep = app.add_subcommand("sweep", "Run a registered claim over a range");
  sweep->add_option("--claim", cfg.claim_id)->required();
  sweep->add_option("--max", cfg.max)->required();
  sweep->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--out", out, "Report path (default: $RESIDUUM_OUT/<claim>.<format>)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string ledger_dir;
  auto* ledger_cmd = app.add_subcommand("ledger", "Summarize the reports in a directory");
  ledger_cmd->add_option("--dir", ledger_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decompose) return cmd_decompose(M, primes_only);
    if (*goldbach) return cmd_goldbach(M);
    if (*alpha) return cmd_alpha_check(K);
    if (*circle) return cmd_circle(n, nonnegative);
    if (*squares) return cmd_two_squares(n);
    if (*fermat) return cmd_fermat(M, N);
    if (*bounds) {
      if (*bounds_sweep) return print_report(run_claim({"rem3-bounds", sweep_max, 1, {}, ReportFormat::json}));
      return cmd_factor_bounds(N);
    }
    if (*ode_cmd) return cmd_ode(ode);
    if (*poisson) return cmd_poisson(mode, grid_n);
    if (*membrane) return cmd_membrane(L, k, grid_n);
    if (*sweep) {
      cfg.format = format == "csv" ? ReportFormat::csv : ReportFormat::json;
      return cmd_sweep(cfg, out);
    }
    if (*ledger_cmd) {
      std::cout << ledger(ledger_dir.empty() ? default_output_dir() : std::filesystem::path(ledger_dir));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

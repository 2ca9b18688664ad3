#include <cmath>
#include <numbers>

#include "doctest.h"
#include "residuum/pde.hpp"

using namespace residuum;

namespace {

constexpr double kPi = std::numbers::pi;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io;
}

}  // namespace

TEST_CASE("symmetric sine product splits the Laplacian evenly") {
  const PoissonSplitReport r = poisson_split_check(sine_product(1, 1, 101));
  CHECK(r.max_split_residual <= 0.01 * r.max_abs_f);
  CHECK(r.max_asymmetry <= 1e-10);
  CHECK(std::fabs(r.asymmetry_integral) <= 1e-8);
  CHECK(r.max_abs_u == doctest::Approx(1.0));
}

TEST_CASE("asymmetric sine product breaks the split") {
  const PoissonSplitReport r = poisson_split_check(sine_product(1, 2, 101));
  CHECK(r.max_split_residual > 0.01 * r.max_abs_f);
  CHECK(r.max_asymmetry >= 0.9 * 3 * kPi * kPi * r.max_abs_u);
  CHECK(std::fabs(r.asymmetry_integral) <= 1e-8);
}

TEST_CASE("zero field has zero residuals") {
  auto g = sine_product(1, 1, 21);
  g.values.setZero();
  const PoissonSplitReport r = poisson_split_check(g);
  CHECK(r.max_split_residual == 0.0);
  CHECK(r.max_asymmetry == 0.0);
  CHECK(r.asymmetry_integral == 0.0);
}

TEST_CASE("Poisson check input errors") {
  CHECK(code_of([] { poisson_split_check(sine_product(1, 1, 4)); }) == Errc::below_minimum);
  CHECK(code_of([] {
          auto g = sine_product(1, 1, 11);
          g.values(0, 5) = 1.0;
          poisson_split_check(g);
        }) == Errc::boundary_violation);
  CHECK(code_of([] {
          auto g = Grid2D<double>::sample(0, 1, 0, 2, 11, 11, [](double, double) { return 0.0; });
          poisson_split_check(g);
        }) == Errc::grid_mismatch);
}

TEST_CASE("membrane eigenvalues and residuals") {
  const auto [m1, g1] = membrane_modes(1.0, 1, 1.0, 51);
  CHECK(m1.lambda == doctest::Approx(2 * kPi * kPi));
  CHECK(membrane_residual(m1, g1) <= 0.05);
  CHECK(g1.max_boundary_abs() <= 1e-12);
  const auto [m2, g2] = membrane_modes(1.0, 2, 1.0, 51);
  CHECK(m2.lambda == doctest::Approx(8 * kPi * kPi));
  const auto [m0, g0] = membrane_modes(2.0, 1, 0.0, 51);
  CHECK(membrane_residual(m0, g0) == 0.0);
}

TEST_CASE("membrane residual converges at second order") {
  double r[3];
  const Eigen::Index ns[] = {51, 101, 201};
  for (int i = 0; i < 3; ++i) {
    const auto [m, g] = membrane_modes(1.0, 1, 1.0, ns[i]);
    r[i] = membrane_residual(m, g);
  }
  CHECK(std::log2(r[0] / r[1]) == doctest::Approx(2.0).epsilon(0.1));
  CHECK(std::log2(r[1] / r[2]) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("superposition") {
  const Grid2D<double> s = superpose({{1.0, 1, 2 * kPi * kPi, 1.0}, {1.0, 2, 8 * kPi * kPi, 0.5}}, 31);
  const auto [m1, g1] = membrane_modes(1.0, 1, 1.0, 31);
  const auto [m2, g2] = membrane_modes(1.0, 2, 0.5, 31);
  CHECK((s.values - g1.values - g2.values).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(code_of([] { superpose({}, 31); }) == Errc::invalid_argument);
  CHECK(code_of([] { superpose({{1.0, 1, 0, 1}, {2.0, 1, 0, 1}}, 31); }) == Errc::grid_mismatch);
  CHECK(code_of([] { membrane_modes(0.0, 1, 1.0, 31); }) == Errc::domain);
  CHECK(code_of([] { membrane_modes(1.0, 0, 1.0, 31); }) == Errc::below_minimum);
  CHECK(code_of([] {
          const auto [m, g] = membrane_modes(1.0, 1, 1.0, 31);
          EigenMode other = m;
          other.L = 2.0;
          membrane_residual(other, g);
        }) == Errc::grid_mismatch);
}

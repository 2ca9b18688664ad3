#include "residuum/pde.hpp"

#include <cmath>
#include <numbers>

namespace residuum {

PoissonSplitReport poisson_split_check(const Grid2D<double>& u) {
  if (u.nx < 5 || u.ny < 5) throw Error(Errc::below_minimum, "poisson_split_check needs at least 5 nodes per axis");
  if (!u.uniform()) throw Error(Errc::grid_mismatch, "grid spacing differs between axes");
  if (u.max_boundary_abs() > 1e-12) throw Error(Errc::boundary_violation, "u does not vanish on the boundary");

  const GridValues<double> uxx = second_difference_x(u);
  const GridValues<double> uyy = second_difference_y(u);
  const GridValues<double> f = -(uxx + uyy);
  const GridValues<double> asym = uxx - uyy;

  PoissonSplitReport r;
  r.max_split_residual = (uxx + 0.5 * f).cwiseAbs().maxCoeff();
  r.max_asymmetry = asym.cwiseAbs().maxCoeff();
  // Column-major sum in a fixed order.
  double sum = 0.0;
  for (Eigen::Index j = 0; j < asym.cols(); ++j) {
    for (Eigen::Index i = 0; i < asym.rows(); ++i) sum += asym(i, j);
  }
  r.asymmetry_integral = sum * u.h * u.h;
  r.max_abs_f = f.cwiseAbs().maxCoeff();
  r.max_abs_u = u.values.cwiseAbs().maxCoeff();
  return r;
}

Grid2D<double> sine_product(int p, int q, Eigen::Index n) {
  const double pi = std::numbers::pi;
  return Grid2D<double>::sample(0.0, 1.0, 0.0, 1.0, n, n, [&](double x, double y) {
    return std::sin(p * pi * x) * std::sin(q * pi * y);
  });
}

std::pair<EigenMode, Grid2D<double>> membrane_modes(double L, int k, double amplitude, Eigen::Index grid_n) {
  if (!(L > 0.0)) throw Error(Errc::domain, "membrane half-width L must be positive");
  if (k < 1) throw Error(Errc::below_minimum, "mode index k must be >= 1");
  if (grid_n < 5) throw Error(Errc::below_minimum, "membrane grid needs at least 5 nodes per axis");
  EigenMode mode;
  mode.L = L;
  mode.k = k;
  mode.amplitude = amplitude;
  const double w = k * std::numbers::pi / L;
  mode.lambda = 2.0 * w * w;
  auto grid = Grid2D<double>::sample(-L, L, -L, L, grid_n, grid_n, [&](double x, double y) {
    return amplitude * std::sin(w * x) * std::sin(w * y);
  });
  return {mode, std::move(grid)};
}

double membrane_residual(const EigenMode& mode, const Grid2D<double>& u) {
  const double tol = 1e-12 * mode.L;
  if (std::abs(u.x_min + mode.L) > tol || std::abs(u.x_max - mode.L) > tol || std::abs(u.y_min + mode.L) > tol ||
      std::abs(u.y_max - mode.L) > tol || !u.uniform())
    throw Error(Errc::grid_mismatch, "grid does not cover [-L, L]^2 uniformly");
  if (u.nx < 3 || u.ny < 3) throw Error(Errc::grid_mismatch, "grid has no interior");
  return (laplacian_5pt(u) + mode.lambda * interior(u)).cwiseAbs().maxCoeff();
}

Grid2D<double> superpose(const std::vector<EigenMode>& modes, Eigen::Index grid_n) {
  if (modes.empty()) throw Error(Errc::invalid_argument, "superpose needs at least one mode");
  const double L = modes.front().L;
  auto sum = membrane_modes(L, modes.front().k, modes.front().amplitude, grid_n).second;
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (modes[i].L != L) throw Error(Errc::grid_mismatch, "superposed modes must share L");
    sum.values += membrane_modes(L, modes[i].k, modes[i].amplitude, grid_n).second.values;
  }
  return sum;
}

}  // namespace residuum

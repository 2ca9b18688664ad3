#pragma once

#include <utility>
#include <vector>

#include "residuum/grid.hpp"

namespace residuum {

struct PoissonSplitReport {
  double max_split_residual = 0.0;  // max |u_xx + f/2| with f = -Laplacian(u)
  double max_asymmetry = 0.0;       // max |u_xx - u_yy|
  double asymmetry_integral = 0.0;  // h^2 * sum (u_xx - u_yy) over interior nodes
  double max_abs_f = 0.0;
  double max_abs_u = 0.0;
};

/// Throws Errc::below_minimum for fewer than 5 nodes per axis,
/// Errc::grid_mismatch for a non-uniform grid and Errc::boundary_violation
/// when |u| > 1e-12 somewhere on the boundary.
PoissonSplitReport poisson_split_check(const Grid2D<double>& u);

/// sin(p pi x) sin(q pi y) sampled on [0,1]^2 with n nodes per axis.
Grid2D<double> sine_product(int p, int q, Eigen::Index n);

struct EigenMode {
  double L = 1.0;
  int k = 1;
  double lambda = 0.0;  // 2 (k pi / L)^2
  double amplitude = 1.0;
};

/// C sin(k pi x/L) sin(k pi y/L) on [-L, L]^2 with grid_n nodes per axis.
/// Throws Errc::domain for L <= 0, Errc::below_minimum for k < 1 or
/// grid_n < 5.
std::pair<EigenMode, Grid2D<double>> membrane_modes(double L, int k, double amplitude, Eigen::Index grid_n);

/// max over interior nodes of |Laplacian_h u + lambda u|. Throws
/// Errc::grid_mismatch when u does not cover [-L, L]^2 uniformly.
double membrane_residual(const EigenMode& mode, const Grid2D<double>& u);

/// Nodewise sum of the sampled modes; Errc::grid_mismatch for mixed L,
/// Errc::invalid_argument for an empty list.
Grid2D<double> superpose(const std::vector<EigenMode>& modes, Eigen::Index grid_n);

}  // namespace residuum

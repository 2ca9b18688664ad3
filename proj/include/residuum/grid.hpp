#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "residuum/error.hpp"

namespace residuum {

template <typename Scalar>
using GridValues = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Uniform rectangular grid; values(i, j) is the node at
/// (x_min + i h, y_min + j h).
template <typename Scalar = double>
struct Grid2D {
  Scalar x_min = 0, x_max = 1;
  Scalar y_min = 0, y_max = 1;
  Eigen::Index nx = 0, ny = 0;
  Scalar h = 0;
  GridValues<Scalar> values;

  Scalar x(Eigen::Index i) const { return x_min + static_cast<Scalar>(i) * h; }
  Scalar y(Eigen::Index j) const { return y_min + static_cast<Scalar>(j) * h; }

  Scalar spacing_x() const { return (x_max - x_min) / static_cast<Scalar>(nx - 1); }
  Scalar spacing_y() const { return (y_max - y_min) / static_cast<Scalar>(ny - 1); }

  bool uniform(Scalar rel_tol = Scalar(1e-12)) const {
    if (nx < 2 || ny < 2) return false;
    const Scalar hx = spacing_x(), hy = spacing_y();
    return std::abs(hx - hy) <= rel_tol * std::abs(hx) && std::abs(h - hx) <= rel_tol * std::abs(hx);
  }

  Scalar max_boundary_abs() const {
    const Eigen::Index r = values.rows(), c = values.cols();
    return std::max({values.row(0).cwiseAbs().maxCoeff(), values.row(r - 1).cwiseAbs().maxCoeff(),
                     values.col(0).cwiseAbs().maxCoeff(), values.col(c - 1).cwiseAbs().maxCoeff()});
  }

  /// Samples fn(x, y) on an nx-by-ny grid over [x_min, x_max] x [y_min, y_max].
  template <typename Fn>
  static Grid2D sample(Scalar x_min, Scalar x_max, Scalar y_min, Scalar y_max, Eigen::Index nx, Eigen::Index ny,
                       Fn&& fn) {
    if (nx < 3 || ny < 3) throw Error(Errc::below_minimum, "grid needs at least 3 nodes per axis");
    Grid2D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.nx = nx;
    g.ny = ny;
    g.h = g.spacing_x();
    g.values.resize(nx, ny);
    for (Eigen::Index j = 0; j < ny; ++j) {
      for (Eigen::Index i = 0; i < nx; ++i) g.values(i, j) = fn(g.x(i), g.y(j));
    }
    return g;
  }
};

// Interior second differences, (nx-2) x (ny-2), indexed like the interior
// nodes (1..nx-2, 1..ny-2).
template <typename Scalar>
GridValues<Scalar> second_difference_x(const Grid2D<Scalar>& g) {
  const auto& v = g.values;
  const Eigen::Index m = g.nx - 2, n = g.ny - 2;
  return (v.block(2, 1, m, n) - Scalar(2) * v.block(1, 1, m, n) + v.block(0, 1, m, n)) / (g.h * g.h);
}

template <typename Scalar>
GridValues<Scalar> second_difference_y(const Grid2D<Scalar>& g) {
  const auto& v = g.values;
  const Eigen::Index m = g.nx - 2, n = g.ny - 2;
  return (v.block(1, 2, m, n) - Scalar(2) * v.block(1, 1, m, n) + v.block(1, 0, m, n)) / (g.h * g.h);
}

/// Standard 5-point Laplacian on interior nodes.
template <typename Scalar>
GridValues<Scalar> laplacian_5pt(const Grid2D<Scalar>& g) {
  return second_difference_x(g) + second_difference_y(g);
}

template <typename Scalar>
auto interior(const Grid2D<Scalar>& g) {
  return g.values.block(1, 1, g.nx - 2, g.ny - 2);
}

}  // namespace residuum

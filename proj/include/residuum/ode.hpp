#pragma once

#include <Eigen/Dense>
#include <limits>

#include "residuum/expr.hpp"

namespace residuum {

/// Coefficient of the complement direction when F(1,1) = target and the
/// functional has normal (comp1, comp2): target / (comp1^2 + comp2^2).
/// Throws Errc::domain when comp1 = comp2 = 0.
double projection_lambda2(double comp1, double comp2, double target);

/// u' = sqrt(f/lambda2) sin(theta), b u = sqrt(f/lambda2) cos(theta) with
/// lambda2 = (1 + sin 2 theta) / f, theta = pi t / ell.
struct TrigParametrization {
  double du = 0.0;
  double bu = 0.0;
  double lambda2 = 0.0;
};

/// Requires f > 0 and 1 + sin(2 theta) > 0; throws Errc::domain otherwise.
TrigParametrization trig_parametrize(double f, double t, double ell);

/// Closed-form G(t) = int_0^t b tan(pi s/ell) ds = -(b ell/pi) ln cos(pi t/ell)
/// for constant b.
double closed_form_G(double b, double ell, double t);

/// Closed-form solution of x'' + b x' + c x = y, x(0) = alpha, x'(0) = beta
/// built from u'/u = b tan(pi t/ell), sampled at half-step spacing
/// (sample j sits at t = j * step / 2, j = 0 .. 2 * steps).
struct OdeWitness {
  double alpha = 0.0;
  double beta = 0.0;
  double ell = 1.0;
  CoefficientExpr b = CoefficientExpr::constant(0.0);
  CoefficientExpr c = CoefficientExpr::constant(0.0);
  double t_end = 0.0;
  double step = 0.0;  // integrator step; t_end / step is integral
  Eigen::Index steps = 0;
  Eigen::VectorXd g_values;  // G(t)
  Eigen::VectorXd x_values;
  Eigen::VectorXd u_values;
  Eigen::VectorXd y_values;
  // max |G - closed form| when b is a literal constant, NaN otherwise
  double closed_form_G_error = std::numeric_limits<double>::quiet_NaN();
  double max_residual = std::numeric_limits<double>::quiet_NaN();

  double sample_time(Eigen::Index j) const { return 0.5 * step * static_cast<double>(j); }
};

/// Composite Simpson quadrature for G and for x, matched to the integrator
/// step. The requested step is shrunk so it divides t_end.
/// Throws Errc::domain unless 0 < t_end < ell/2, Errc::invalid_argument when
/// step > t_end/100 or step <= 0.
OdeWitness ode_construct(double alpha, double beta, double ell, const CoefficientExpr& b, const CoefficientExpr& c,
                         double t_end, double step);

/// Re-integrates x' = u, u' = y - b u - c x with classical RK4 at the
/// witness step and returns max |x_rk4 - x| / (1 + |x|) over the step nodes.
double ode_verify(const OdeWitness& w);

}  // namespace residuum

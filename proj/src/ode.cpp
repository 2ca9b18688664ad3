#include "residuum/ode.hpp"

#include <cmath>
#include <numbers>

namespace residuum {

double projection_lambda2(double comp1, double comp2, double target) {
  const double norm = comp1 * comp1 + comp2 * comp2;
  if (norm == 0.0) throw Error(Errc::domain, "projection onto a zero normal");
  return target / norm;
}

TrigParametrization trig_parametrize(double f, double t, double ell) {
  const double theta = std::numbers::pi * t / ell;
  const double lift = 1.0 + std::sin(2.0 * theta);
  if (!(f > 0.0) || !(lift > 0.0)) throw Error(Errc::domain, "trig parametrization needs f > 0 and 1 + sin 2theta > 0");
  TrigParametrization p;
  p.lambda2 = lift / f;
  const double amplitude = std::sqrt(f / p.lambda2);
  p.du = amplitude * std::sin(theta);
  p.bu = amplitude * std::cos(theta);
  return p;
}

double closed_form_G(double b, double ell, double t) {
  return -(b * ell / std::numbers::pi) * std::log(std::cos(std::numbers::pi * t / ell));
}

OdeWitness ode_construct(double alpha, double beta, double ell, const CoefficientExpr& b, const CoefficientExpr& c,
                         double t_end, double step) {
  if (!(ell > 0.0)) throw Error(Errc::domain, "interval length must be positive");
  if (!(t_end > 0.0) || !(t_end < ell / 2.0))
    throw Error(Errc::domain, "[0, t_end] must stay below the tan singularity at ell/2");
  if (!(step > 0.0) || step > t_end / 100.0) throw Error(Errc::invalid_argument, "step must satisfy 0 < step <= t_end/100");

  OdeWitness w;
  w.alpha = alpha;
  w.beta = beta;
  w.ell = ell;
  w.b = b;
  w.c = c;
  w.t_end = t_end;
  w.steps = static_cast<Eigen::Index>(std::ceil(t_end / step - 1e-9));
  w.step = t_end / static_cast<double>(w.steps);

  const double k = std::numbers::pi / ell;
  auto g = [&](double s) { return b(s) * std::tan(k * s); };

  // G on a quarter-step grid (Simpson on each cell, midpoints at eighth
  // steps), exp(G) there, then x on the half-step grid by Simpson over
  // pairs of quarter cells.
  const Eigen::Index quarters = 4 * w.steps;
  const double d = w.step / 4.0;
  Eigen::VectorXd gs(2 * quarters + 1);
  for (Eigen::Index i = 0; i < gs.size(); ++i) gs(i) = g(0.5 * d * static_cast<double>(i));
  Eigen::VectorXd G(quarters + 1);
  G(0) = 0.0;
  for (Eigen::Index m = 0; m < quarters; ++m) G(m + 1) = G(m) + d / 6.0 * (gs(2 * m) + 4.0 * gs(2 * m + 1) + gs(2 * m + 2));
  const Eigen::VectorXd E = G.array().exp();

  const Eigen::Index samples = 2 * w.steps + 1;
  w.g_values.resize(samples);
  w.x_values.resize(samples);
  w.u_values.resize(samples);
  w.y_values.resize(samples);
  w.x_values(0) = alpha;
  for (Eigen::Index j = 0; j < samples; ++j) {
    if (j > 0) {
      w.x_values(j) = w.x_values(j - 1) + beta * (2.0 * d) / 6.0 * (E(2 * j - 2) + 4.0 * E(2 * j - 1) + E(2 * j));
    }
    const double t = w.sample_time(j);
    w.g_values(j) = G(2 * j);
    w.u_values(j) = beta * E(2 * j);
    w.y_values(j) = c(t) * w.x_values(j) + w.u_values(j) * b(t) * (1.0 + std::tan(k * t));
  }

  if (b.is_constant()) {
    const double bc = b(0.0);
    double err = 0.0;
    for (Eigen::Index j = 0; j < samples; ++j)
      err = std::max(err, std::abs(w.g_values(j) - closed_form_G(bc, ell, w.sample_time(j))));
    w.closed_form_G_error = err;
  }
  return w;
}

double ode_verify(const OdeWitness& w) {
  const double h = w.step;
  auto rhs = [&](double t, const Eigen::Vector2d& z, double y) {
    return Eigen::Vector2d(z(1), y - w.b(t) * z(1) - w.c(t) * z(0));
  };
  Eigen::Vector2d z(w.alpha, w.beta);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < w.steps; ++i) {
    const double t = w.sample_time(2 * i);
    const double y0 = w.y_values(2 * i), y_mid = w.y_values(2 * i + 1), y1 = w.y_values(2 * i + 2);
    const Eigen::Vector2d k1 = rhs(t, z, y0);
    const Eigen::Vector2d k2 = rhs(t + h / 2, z + h / 2 * k1, y_mid);
    const Eigen::Vector2d k3 = rhs(t + h / 2, z + h / 2 * k2, y_mid);
    const Eigen::Vector2d k4 = rhs(t + h, z + h * k3, y1);
    z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double x = w.x_values(2 * i + 2);
    worst = std::max(worst, std::abs(z(0) - x) / (1.0 + std::abs(x)));
  }
  return worst;
}

}  // namespace residuum

#include "rmtlab/tw/painleve.hpp"

#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"
#include "rmtlab/numerics/ode.hpp"

namespace rmtlab::tw {

namespace {

// Coefficients u_k, v_k of the Airy asymptotic series
//   Ai(x)  ~  e^-z / (2 sqrt(pi) x^(1/4)) * sum (-1)^k u_k z^-k,
//   Ai'(x) ~ -x^(1/4) e^-z / (2 sqrt(pi)) * sum (-1)^k v_k z^-k,
// with z = (2/3) x^(3/2). Summed to optimal truncation.
void airy_series(double z, double* s_ai, double* s_aip) {
  double u = 1.0;
  double sum_u = 1.0;
  double sum_v = 1.0;
  double sign = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double kk = static_cast<double>(k);
    u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
         ((2.0 * kk - 1.0) * 216.0 * kk);
    const double term = u / std::pow(z, kk);
    if (term > prev) break;  // past optimal truncation
    prev = term;
    sign = -sign;
    sum_u += sign * term;
    const double v_over_u = (6.0 * kk + 1.0) / (1.0 - 6.0 * kk);
    sum_v += sign * term * v_over_u;
    if (term < 1e-18) break;
  }
  *s_ai = sum_u;
  *s_aip = sum_v;
}

}  // namespace

AiryTail airy_tail(double x) {
  if (!(x >= 6.0)) {
    throw ParameterError("airy_tail: asymptotic form requires x >= 6");
  }
  const double z = (2.0 / 3.0) * std::pow(x, 1.5);
  const double pref = std::exp(-z) / (2.0 * std::sqrt(M_PI));
  double s_ai, s_aip;
  airy_series(z, &s_ai, &s_aip);

  AiryTail t;
  t.ai = pref * s_ai / std::pow(x, 0.25);
  t.aip = -pref * s_aip * std::pow(x, 0.25);

  // Tail integrals of Ai^2 have exact closed forms:
  //   d/dx [Ai'^2 - x Ai^2] = -Ai^2
  //   d/dx [(2/3)x^2 Ai^2 - (2/3)x Ai'^2 - (1/3) Ai Ai'] = x Ai^2 - Ai'^2
  t.int_ai2 = t.aip * t.aip - x * t.ai * t.ai;
  t.int_w_ai2 = (2.0 / 3.0) * x * x * t.ai * t.ai -
                (2.0 / 3.0) * x * t.aip * t.aip - (1.0 / 3.0) * t.ai * t.aip;

  // No elementary antiderivative for Ai itself; composite Simpson over the
  // asymptotic form, integrand decays like e^-z so 30 units of x suffice.
  const int m = 3000;  // even
  const double span = 30.0;
  const double h = span / m;
  double acc = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double xi = x + h * i;
    const double zi = (2.0 / 3.0) * std::pow(xi, 1.5);
    double si, sip;
    airy_series(zi, &si, &sip);
    const double f = std::exp(-zi) / (2.0 * std::sqrt(M_PI)) * si /
                     std::pow(xi, 0.25);
    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * f;
  }
  t.int_ai = acc * h / 3.0;
  return t;
}

PainleveSolution solve_painleve2(double x_start, double x_end, double tol,
                                 double grid_step) {
  if (!(x_start >= 6.0)) {
    throw ParameterError("solve_painleve2: x_start must be >= 6");
  }
  if (!(x_end <= -8.0)) {
    throw ParameterError("solve_painleve2: x_end must be <= -8");
  }
  if (!(tol > 0.0) || !(grid_step > 0.0)) {
    throw ParameterError("solve_painleve2: tol and grid_step must be positive");
  }

  const AiryTail bd = airy_tail(x_start);
  // State: (q, q', int q^2, int (y-x) q^2, int q), primed by the Airy tail.
  std::vector<double> y0 = {bd.ai, bd.aip, bd.int_ai2, bd.int_w_ai2, bd.int_ai};

  const numerics::OdeRhs rhs = [](double x, const std::vector<double>& y,
                                  std::vector<double>& dy) {
    dy[0] = y[1];
    dy[1] = x * y[0] + 2.0 * y[0] * y[0] * y[0];
    dy[2] = -y[0] * y[0];
    dy[3] = -y[2];
    dy[4] = -y[0];
  };

  numerics::OdeTrajectory traj;
  try {
    traj = numerics::integrate_ode(rhs, y0, x_start, x_end, tol, 1e-300,
                                   grid_step);
  } catch (const NumericError& e) {
    throw NumericError(std::string("solve_painleve2: left the Hastings-McLeod branch (") +
                       e.what() + ")");
  }

  const int npts = static_cast<int>(std::lround((x_start - x_end) / grid_step)) + 1;
  PainleveSolution sol;
  sol.x_start = x_start;
  sol.x_end = x_end;
  sol.tol = tol;
  sol.grid_step = grid_step;
  sol.grid.resize(npts);
  sol.q.resize(npts);
  sol.dq.resize(npts);
  sol.int_q2.resize(npts);
  sol.int_wq2.resize(npts);
  sol.int_q.resize(npts);

  for (int i = 0; i < npts; ++i) {
    double x = x_start - grid_step * i;
    if (i == npts - 1) x = x_end;
    sol.grid[i] = x;
    sol.q[i] = traj.interpolate(x, 0);
    sol.dq[i] = traj.interpolate(x, 1);
    sol.int_q2[i] = traj.interpolate(x, 2);
    sol.int_wq2[i] = traj.interpolate(x, 3);
    sol.int_q[i] = traj.interpolate(x, 4);
  }

  // The Hastings-McLeod branch is positive and bounded by its left
  // asymptote sqrt(-x/2); a sign crossing or a large overshoot means the
  // integration fell onto a neighboring branch.
  for (int i = 0; i < npts; ++i) {
    const double x = sol.grid[i];
    const double bound = 4.0 + 2.0 * std::sqrt(std::max(0.0, -x));
    if (!(sol.q[i] > 0.0) || sol.q[i] > bound || !std::isfinite(sol.q[i])) {
      throw NumericError("solve_painleve2: left the Hastings-McLeod branch near x=" +
                         std::to_string(x));
    }
  }
  return sol;
}

}  // namespace rmtlab::tw

#include "rmtlab/numerics/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

double OdeTrajectory::interpolate(double xi, std::size_t k) const {
  const bool fwd = x.back() >= x.front();
  std::size_t lo = 0, hi = x.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const bool left = fwd ? (x[mid] <= xi) : (x[mid] >= xi);
    if (left) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x0 = x[lo], x1 = x[hi];
  if (x1 == x0) return y[lo][k];
  const double t = (xi - x0) / (x1 - x0);
  return (1.0 - t) * y[lo][k] + t * y[hi][k];
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-minus-4th order error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeTrajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                            double x0, double x1, double rtol, double atol,
                            double max_step) {
  if (x0 == x1) throw ParameterError("integrate_ode: x0 and x1 must differ");
  if (!(rtol > 0.0)) throw ParameterError("integrate_ode: tol must be positive");
  if (atol < 0.0) atol = rtol;

  const std::size_t dim = y0.size();
  const double dir = (x1 > x0) ? 1.0 : -1.0;
  const double span = std::fabs(x1 - x0);

  OdeTrajectory traj;
  traj.x.push_back(x0);
  traj.y.push_back(y0);

  std::vector<double> y = y0, ytmp(dim), yerr(dim), ynew(dim);
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim),
      k7(dim);

  rhs(x0, y, k1);

  double h = std::min(span / 100.0, 0.1);
  if (max_step > 0.0) h = std::min(h, max_step);
  double x = x0;
  double err_prev = 1.0;
  const double safety = 0.9;
  const std::size_t max_steps = 20000000;

  auto blow_up = [&](double at) {
    throw NumericError("integrate_ode: step size underflow or non-finite state near x=" +
                       std::to_string(at) + " (last good x)");
  };

  for (std::size_t step = 0; step < max_steps; ++step) {
    if (dir * (x - x1) >= 0.0) break;
    if (dir * (x + dir * h - x1) > 0.0) h = std::fabs(x1 - x);
    const double hs = dir * h;

    for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
    rhs(x + c2 * hs, ytmp, k2);
    for (std::size_t i = 0; i < dim; ++i)
      ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    rhs(x + c3 * hs, ytmp, k3);
    for (std::size_t i = 0; i < dim; ++i)
      ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(x + c4 * hs, ytmp, k4);
    for (std::size_t i = 0; i < dim; ++i)
      ytmp[i] =
          y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(x + c5 * hs, ytmp, k5);
    for (std::size_t i = 0; i < dim; ++i)
      ytmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                             a64 * k4[i] + a65 * k5[i]);
    rhs(x + hs, ytmp, k6);
    for (std::size_t i = 0; i < dim; ++i)
      ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                             b5 * k5[i] + b6 * k6[i]);
    rhs(x + hs, ynew, k7);
    for (std::size_t i = 0; i < dim; ++i)
      yerr[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                      e6 * k6[i] + e7 * k7[i]);

    double err = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!std::isfinite(ynew[i])) {
        finite = false;
        break;
      }
      const double sc = atol + rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      const double r = yerr[i] / sc;
      err += r * r;
    }
    err = finite ? std::sqrt(err / static_cast<double>(dim)) : 1e300;

    if (err <= 1.0) {
      x += hs;
      y = ynew;
      k1 = k7;  // FSAL
      traj.x.push_back(x);
      traj.y.push_back(y);
      // PI controller (order 5).
      const double fac = safety * std::pow(err > 1e-30 ? err : 1e-30, -0.7 / 5.0) *
                         std::pow(err_prev, 0.4 / 5.0);
      h *= std::clamp(fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-30);
    } else {
      h *= std::max(0.2, safety * std::pow(err, -0.2));
    }
    if (max_step > 0.0) h = std::min(h, max_step);
    if (h < 1e-14 * std::max(1.0, std::fabs(x))) blow_up(x);
  }

  if (dir * (x - x1) < 0.0) blow_up(x);
  return traj;
}

}  // namespace rmtlab::numerics

#pragma once

#include <functional>
#include <vector>

namespace rmtlab::numerics {

using OdeRhs = std::function<void(double x, const std::vector<double>& y,
                                  std::vector<double>& dydx)>;

/// Accepted integration steps; x runs monotonically from x0 to x1 (either
/// direction) and y[i] is the state at x[i].
struct OdeTrajectory {
  std::vector<double> x;
  std::vector<std::vector<double>> y;

  /// Linear interpolation of component k at position xi (xi within range).
  double interpolate(double xi, std::size_t k) const;
};

/// Adaptive embedded Dormand-Prince 4(5) integration from x0 to x1,
/// decreasing x allowed. Local error per step is kept below
/// rtol*|y| + atol componentwise, with a PI step-size controller.
/// max_step > 0 caps the step length (0 = unrestricted). Step underflow or
/// a non-finite state throws NumericError naming the last good x.
OdeTrajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0,
                            double x0, double x1, double rtol,
                            double atol = -1.0, double max_step = 0.0);

}  // namespace rmtlab::numerics

#pragma once

namespace rmtlab::numerics {

/// log of the regularized lower incomplete gamma P(a, x), computed in log
/// scale so tails far below double range stay representable. Series
/// expansion; intended for x <= a + 1.
double log_gamma_p(double a, double x);

/// log of the regularized upper incomplete gamma Q(a, x) via the Lentz
/// continued fraction; intended for x >= a + 1 but valid on x > 0.
double log_gamma_q(double a, double x);

/// Regularized lower incomplete gamma P(a, x) (the Gamma(a, 1) CDF).
double gamma_p(double a, double x);

/// CDF of Gamma(shape, scale) at x.
double gamma_cdf(double shape, double scale, double x);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace rmtlab::numerics

#include "rmtlab/numerics/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

namespace {

constexpr int kMaxIter = 2000000;
constexpr double kEps = 1e-16;

}  // namespace

double log_gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw ParameterError("log_gamma_p: need a > 0 and x >= 0");
  }
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  // P(a,x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k))
  double term = 1.0;
  double sum = 1.0;
  double denom = a;
  for (int k = 0; k < kMaxIter; ++k) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (term < sum * kEps) break;
  }
  return a * std::log(x) - x - std::lgamma(a + 1.0) + std::log(sum);
}

double log_gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x > 0.0)) {
    throw ParameterError("log_gamma_q: need a > 0 and x > 0");
  }
  // Q(a,x) = x^a e^-x / Gamma(a) * CF, modified Lentz on the standard
  // continued fraction b0 + a1/(b1 + a2/(b2 + ...)).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / (b == 0.0 ? tiny : b);
  double f = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    f *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return a * std::log(x) - x - std::lgamma(a) + std::log(f);
}

double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) return std::exp(log_gamma_p(a, x));
  return 1.0 - std::exp(log_gamma_q(a, x));
}

double gamma_cdf(double shape, double scale, double x) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw ParameterError("gamma_cdf: shape and scale must be positive");
  }
  return gamma_p(shape, x / scale);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace rmtlab::numerics

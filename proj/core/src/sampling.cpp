#include "rmtlab/numerics/sampling.hpp"

#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

double sample_gamma(double shape, double scale, RngStream& rng) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw ParameterError("sample_gamma: shape and scale must be positive, got shape=" +
                         std::to_string(shape) + " scale=" + std::to_string(scale));
  }
  if (shape < 1.0) {
    const double u = rng.next_double();
    return sample_gamma(shape + 1.0, scale, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = rng.next_gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double sample_chi(double k, RngStream& rng) {
  if (!(k > 0.0)) {
    throw ParameterError("sample_chi: degrees of freedom must be positive, got " +
                         std::to_string(k));
  }
  return std::sqrt(sample_gamma(0.5 * k, 2.0, rng));
}

}  // namespace rmtlab::numerics

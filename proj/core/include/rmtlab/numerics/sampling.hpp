#pragma once

#include "rmtlab/numerics/rng.hpp"

namespace rmtlab::numerics {

/// Gamma(shape, scale) deviate for any real shape > 0.
///
/// Marsaglia-Tsang squeeze/rejection for shape >= 1; shapes below 1 are
/// boosted through the shape+1 identity X = Gamma(shape+1) * U^(1/shape).
/// Throws ParameterError unless shape > 0 and scale > 0.
double sample_gamma(double shape, double scale, RngStream& rng);

/// Chi deviate with k degrees of freedom, k any positive real:
/// sqrt of a Gamma(k/2, 2) draw. Throws ParameterError unless k > 0.
double sample_chi(double k, RngStream& rng);

}  // namespace rmtlab::numerics

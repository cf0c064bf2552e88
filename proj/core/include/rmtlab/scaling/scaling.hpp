#pragma once

#include <vector>

#include "rmtlab/ensembles/ensembles.hpp"

namespace rmtlab::scaling {

/// Laguerre eigenvalues pushed through the affine Laguerre-to-Hermite map;
/// each entry is bounded below by -sqrt(beta*p/2).
struct TransformedSample {
  std::vector<double> x;  // ascending, order inherited from the spectrum
  ensembles::LaguerreParams source;
};

/// Uniform-weight point measure on the further-rescaled points x_i/sqrt(n).
struct ScaledEmpiricalMeasure {
  std::vector<double> atoms;
  double weight = 0.0;  // 1/n for every atom
};

/// Centering/scaling constants for the extreme eigenvalues (beta = 2).
struct ExtremeCentering {
  double mu_low = 0.0;   // for lambda_min
  double mu_high = 0.0;  // for lambda_max
  double sigma = 0.0;
};

/// x_i = sqrt(p/(2*beta)) * (lambda_i/p - beta), order preserved. Throws
/// InputError if the spectrum was not drawn under the given parameters.
TransformedSample hermite_transform(const ensembles::Spectrum& s,
                                    const ensembles::LaguerreParams& params);

/// (2p - 4*sqrt(np), 2p + 4*sqrt(np), 2*sqrt(p)*n^(-1/6)); stated for
/// beta = 2 only, anything else is a DomainError.
ExtremeCentering extreme_centerings_beta2(const ensembles::LaguerreParams& params);

/// Centering and scale for lambda_min, any beta:
/// (beta*(p - 2*sqrt(np)), beta*sqrt(p)*n^(-1/6)).
struct SmallestCentering {
  double mu = 0.0;
  double sigma = 0.0;
};
SmallestCentering smallest_centering(const ensembles::LaguerreParams& params);

/// sqrt(lambda_max / lambda_min); DomainError if any eigenvalue <= 0.
double condition_number(const ensembles::Spectrum& s);

/// Studentized condition number alpha_n*(kappa_n - beta_n) with
/// alpha_n = 2*sqrt(p)*n^(1/6), beta_n = 1 + 2*sqrt(n/p). Requires beta = 2.
double condition_statistic(const ensembles::Spectrum& s,
                           const ensembles::LaguerreParams& params);

/// Atoms x_i/sqrt(n), weight 1/n each.
ScaledEmpiricalMeasure scaled_empirical_measure(const TransformedSample& t);

}  // namespace rmtlab::scaling

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmtlab/numerics/rng.hpp"

namespace rmtlab::ensembles {

struct HermiteParams {
  int n = 1;
  double beta = 2.0;

  void validate() const;  // n >= 1, beta > 0
};

struct LaguerreParams {
  int n = 1;
  double p = 1.0;  // real parameter, p >= n (rectangular regime)
  double beta = 2.0;

  void validate() const;
};

enum class EnsembleKind { hermite, laguerre };

struct SeedInfo {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

struct SpectrumInfo {
  EnsembleKind kind = EnsembleKind::hermite;
  int n = 0;
  double p = 0.0;  // unused for Hermite
  double beta = 0.0;
  SeedInfo seed;
};

/// Sorted eigenvalue draw with its provenance (ensemble, parameters, seed).
struct Spectrum {
  std::vector<double> values;  // ascending; positive for Laguerre
  SpectrumInfo info;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

/// One draw from the beta-Hermite eigenvalue law: eigenvalues of T/sqrt(2)
/// where T is tridiagonal with N(0,2) diagonal and chi_{beta(n-1)}, ...,
/// chi_beta off-diagonal. The joint law is exactly the |Delta|^beta
/// Gaussian-weight density.
Spectrum sample_hermite(const HermiteParams& params, numerics::RngStream& rng);

/// One draw from the beta-Laguerre eigenvalue law: eigenvalues of B*B^T for
/// the lower bidiagonal B with chi_{beta*p}, ..., chi_{beta(p-n+1)} diagonal
/// and chi_{beta(n-1)}, ..., chi_beta sub-diagonal. Cost is O(n) chi draws
/// plus one tridiagonal eigensolve, independent of the size of p.
Spectrum sample_laguerre(const LaguerreParams& params, numerics::RngStream& rng);

/// Log joint density of the beta-Laguerre ensemble, normalizing constant
/// included via log-Gamma. Returns -inf for any nonpositive or tied
/// coordinate.
double log_density_laguerre(std::span<const double> lambda,
                            const LaguerreParams& params);

/// Log joint density of the beta-Hermite ensemble; -inf on ties.
double log_density_hermite(std::span<const double> x,
                           const HermiteParams& params);

}  // namespace rmtlab::ensembles

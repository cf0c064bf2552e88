#include "rmtlab/ensembles/ensembles.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rmtlab/errors.hpp"
#include "rmtlab/numerics/sampling.hpp"
#include "rmtlab/numerics/tridiagonal.hpp"

namespace rmtlab::ensembles {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void HermiteParams::validate() const {
  if (n < 1) throw ParameterError("HermiteParams: n must be >= 1");
  if (!(beta > 0.0)) throw ParameterError("HermiteParams: beta must be positive");
}

void LaguerreParams::validate() const {
  if (n < 1) throw ParameterError("LaguerreParams: n must be >= 1");
  if (!(beta > 0.0)) throw ParameterError("LaguerreParams: beta must be positive");
  if (!(p >= static_cast<double>(n))) {
    throw ParameterError("LaguerreParams: need p >= n, got p=" +
                         std::to_string(p) + " n=" + std::to_string(n));
  }
}

Spectrum sample_hermite(const HermiteParams& params, numerics::RngStream& rng) {
  params.validate();
  const int n = params.n;

  numerics::SymTridiagonal T;
  T.diag.resize(n);
  T.offdiag.resize(n - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    // N(0,2) diagonal entry combined with the global 1/sqrt(2) scaling.
    T.diag[i] = rng.next_gaussian();
  }
  for (int i = 0; i < n - 1; ++i) {
    const double dof = params.beta * static_cast<double>(n - 1 - i);
    T.offdiag[i] = numerics::sample_chi(dof, rng) * inv_sqrt2;
  }

  Spectrum s;
  s.values = numerics::eigenvalues(T);
  s.info = {EnsembleKind::hermite, n, 0.0, params.beta,
            {rng.master_seed(), rng.stream_index()}};
  return s;
}

Spectrum sample_laguerre(const LaguerreParams& params, numerics::RngStream& rng) {
  params.validate();
  const int n = params.n;
  const double p = params.p;
  const double beta = params.beta;

  // Lower bidiagonal B: diagonal d_i ~ chi_{beta(p-i)}, i = 0..n-1;
  // sub-diagonal e_i ~ chi_{beta(n-1-i)}, i = 0..n-2. B*B^T is the
  // tridiagonal below.
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) {
    d[i] = numerics::sample_chi(beta * (p - static_cast<double>(i)), rng);
  }
  for (int i = 0; i + 1 < n; ++i) {
    e[i] = numerics::sample_chi(beta * static_cast<double>(n - 1 - i), rng);
  }

  numerics::SymTridiagonal T;
  T.diag.resize(n);
  T.offdiag.resize(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) {
    T.diag[i] = d[i] * d[i] + (i > 0 ? e[i - 1] * e[i - 1] : 0.0);
  }
  for (int i = 0; i + 1 < n; ++i) {
    T.offdiag[i] = d[i] * e[i];
  }

  Spectrum s;
  s.values = numerics::eigenvalues(T);
  s.info = {EnsembleKind::laguerre, n, p, beta,
            {rng.master_seed(), rng.stream_index()}};
  return s;
}

double log_density_laguerre(std::span<const double> lambda,
                            const LaguerreParams& params) {
  params.validate();
  const int n = params.n;
  if (lambda.size() != static_cast<std::size_t>(n)) {
    throw InputError("log_density_laguerre: dimension mismatch");
  }
  const double beta = params.beta;
  const double p = params.p;
  const double half_beta = 0.5 * beta;

  double logc = -half_beta * n * p * std::log(2.0);
  for (int j = 1; j <= n; ++j) {
    logc += std::lgamma(1.0 + half_beta) - std::lgamma(1.0 + half_beta * j) -
            std::lgamma(half_beta * (p - n + j));
  }

  const double expo = half_beta * (p - n + 1) - 1.0;
  double acc = logc;
  for (int i = 0; i < n; ++i) {
    if (!(lambda[i] > 0.0)) return kNegInf;
    acc += expo * std::log(lambda[i]) - 0.5 * lambda[i];
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::fabs(lambda[i] - lambda[j]);
      if (gap == 0.0) return kNegInf;
      acc += beta * std::log(gap);
    }
  }
  return acc;
}

double log_density_hermite(std::span<const double> x,
                           const HermiteParams& params) {
  params.validate();
  const int n = params.n;
  if (x.size() != static_cast<std::size_t>(n)) {
    throw InputError("log_density_hermite: dimension mismatch");
  }
  const double beta = params.beta;
  const double half_beta = 0.5 * beta;

  double logk = -0.5 * n * std::log(2.0 * M_PI);
  for (int j = 1; j <= n; ++j) {
    logk += std::lgamma(1.0 + half_beta) - std::lgamma(1.0 + half_beta * j);
  }

  double acc = logk;
  for (int i = 0; i < n; ++i) {
    acc -= 0.5 * x[i] * x[i];
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::fabs(x[i] - x[j]);
      if (gap == 0.0) return kNegInf;
      acc += beta * std::log(gap);
    }
  }
  return acc;
}

}  // namespace rmtlab::ensembles

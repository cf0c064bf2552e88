#include "rmtlab/scaling/scaling.hpp"

#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::scaling {

namespace {

void require_match(const ensembles::Spectrum& s,
                   const ensembles::LaguerreParams& params) {
  const auto& info = s.info;
  if (info.kind != ensembles::EnsembleKind::laguerre || info.n != params.n ||
      info.p != params.p || info.beta != params.beta) {
    throw InputError("hermite_transform: spectrum was not drawn under the given Laguerre parameters");
  }
}

void require_beta2(double beta, const char* what) {
  if (beta != 2.0) {
    throw DomainError(std::string(what) +
                      ": stated for beta=2 only, got beta=" + std::to_string(beta));
  }
}

}  // namespace

TransformedSample hermite_transform(const ensembles::Spectrum& s,
                                    const ensembles::LaguerreParams& params) {
  params.validate();
  require_match(s, params);
  const double scale = std::sqrt(params.p / (2.0 * params.beta));
  TransformedSample t;
  t.source = params;
  t.x.reserve(s.values.size());
  for (double lam : s.values) {
    t.x.push_back(scale * (lam / params.p - params.beta));
  }
  return t;
}

ExtremeCentering extreme_centerings_beta2(const ensembles::LaguerreParams& params) {
  params.validate();
  require_beta2(params.beta, "extreme_centerings_beta2");
  const double n = params.n;
  const double p = params.p;
  const double root_np = std::sqrt(n * p);
  ExtremeCentering c;
  c.mu_low = 2.0 * p - 4.0 * root_np;
  c.mu_high = 2.0 * p + 4.0 * root_np;
  c.sigma = 2.0 * std::sqrt(p) * std::pow(n, -1.0 / 6.0);
  return c;
}

SmallestCentering smallest_centering(const ensembles::LaguerreParams& params) {
  params.validate();
  const double n = params.n;
  const double p = params.p;
  SmallestCentering c;
  c.mu = params.beta * (p - 2.0 * std::sqrt(n * p));
  c.sigma = params.beta * std::sqrt(p) * std::pow(n, -1.0 / 6.0);
  return c;
}

double condition_number(const ensembles::Spectrum& s) {
  if (s.values.empty()) throw InputError("condition_number: empty spectrum");
  if (!(s.min() > 0.0)) {
    throw DomainError("condition_number: all eigenvalues must be positive");
  }
  return std::sqrt(s.max() / s.min());
}

double condition_statistic(const ensembles::Spectrum& s,
                           const ensembles::LaguerreParams& params) {
  params.validate();
  require_beta2(params.beta, "condition_statistic");
  const double n = params.n;
  const double p = params.p;
  const double alpha_n = 2.0 * std::sqrt(p) * std::pow(n, 1.0 / 6.0);
  const double beta_n = 1.0 + 2.0 * std::sqrt(n / p);
  return alpha_n * (condition_number(s) - beta_n);
}

ScaledEmpiricalMeasure scaled_empirical_measure(const TransformedSample& t) {
  ScaledEmpiricalMeasure m;
  const double n = static_cast<double>(t.x.size());
  if (t.x.empty()) throw InputError("scaled_empirical_measure: empty sample");
  const double root_n = std::sqrt(n);
  m.weight = 1.0 / n;
  m.atoms.reserve(t.x.size());
  for (double xi : t.x) m.atoms.push_back(xi / root_n);
  return m;
}

}  // namespace rmtlab::scaling

#include "rmtlab/ldp/ldp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rmtlab/ensembles/ensembles.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/numerics/special.hpp"

namespace rmtlab::ldp {

void GriddedMeasure::validate() const {
  if (grid.size() != mass.size() || grid.empty()) {
    throw InputError("GriddedMeasure: grid/mass size mismatch or empty");
  }
  const double h = step();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::fabs(grid[i] - grid[i - 1] - h) > 1e-9 * std::max(1.0, std::fabs(h))) {
      throw InputError("GriddedMeasure: grid must be uniform");
    }
  }
  double total = 0.0;
  for (double m : mass) {
    if (m < 0.0) throw InputError("GriddedMeasure: negative mass");
    total += m;
  }
  if (std::fabs(total - 1.0) > 1e-10) {
    throw InputError("GriddedMeasure: mass sums to " + std::to_string(total));
  }
}

GriddedMeasure discretize_cdf(const std::function<double(double)>& cdf,
                              double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) {
    throw ParameterError("discretize_cdf: need hi > lo and step > 0");
  }
  GriddedMeasure nu;
  const int n = static_cast<int>(std::ceil((hi - lo) / step - 1e-12));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l = lo + step * i;
    const double c = l + 0.5 * step;
    const double m = cdf(l + step) - cdf(l);
    nu.grid.push_back(c);
    nu.mass.push_back(std::max(m, 0.0));
    total += nu.mass.back();
  }
  if (total <= 0.0) throw InputError("discretize_cdf: no mass in window");
  for (double& m : nu.mass) m /= total;
  return nu;
}

RateValue rate_extreme(double x, double beta, ExtremeSide side) {
  if (!(beta > 0.0)) throw ParameterError("rate_extreme: beta must be positive");
  const bool inside =
      side == ExtremeSide::max ? (x >= beta) : (x > 0.0 && x <= beta);
  if (!inside) return {0.0, false};
  return {0.5 * (x - beta) - 0.5 * beta * std::log(x / beta), true};
}

double gamma_rate_oracle(double x, double beta, double p) {
  if (!(x > 0.0) || !(beta > 0.0) || !(p > 0.0)) {
    throw ParameterError("gamma_rate_oracle: x, beta, p must be positive");
  }
  const double a = 0.5 * beta * p;  // Gamma(a, 2) for the n=1 eigenvalue
  const double z = 0.5 * p * x;     // unit-scale argument
  const double logprob =
      x >= beta ? numerics::log_gamma_q(a, z) : numerics::log_gamma_p(a, z);
  return -logprob / p;
}

double semicircle_pdf(double x, double beta) {
  if (!(beta > 0.0)) throw ParameterError("semicircle_pdf: beta must be positive");
  const double r2 = 2.0 * beta;
  const double d = r2 - x * x;
  if (d <= 0.0) return 0.0;
  return std::sqrt(d) / (beta * M_PI);
}

double semicircle_cdf(double x, double beta) {
  if (!(beta > 0.0)) throw ParameterError("semicircle_cdf: beta must be positive");
  const double r = std::sqrt(2.0 * beta);
  if (x <= -r) return 0.0;
  if (x >= r) return 1.0;
  return 0.5 + (x * std::sqrt(2.0 * beta - x * x) +
                2.0 * beta * std::asin(x / r)) /
                   (2.0 * beta * M_PI);
}

double comparison_pdf(double x, ComparisonLaw which, double gamma) {
  switch (which) {
    case ComparisonLaw::marchenko_pastur: {
      if (!(gamma > 0.0) || gamma > 1.0) {
        throw ParameterError("comparison_pdf: Marchenko-Pastur needs gamma in (0,1]");
      }
      const double g1 = (std::sqrt(gamma) - 1.0) * (std::sqrt(gamma) - 1.0);
      const double g2 = (std::sqrt(gamma) + 1.0) * (std::sqrt(gamma) + 1.0);
      if (x <= g1 || x >= g2) return 0.0;
      return std::sqrt((x - g1) * (g2 - x)) / (2.0 * M_PI * gamma * x);
    }
    case ComparisonLaw::edelman_square: {
      if (x <= 0.0) return 0.0;
      return 8.0 * std::exp(-4.0 / (x * x)) / (x * x * x);
    }
  }
  return 0.0;
}

namespace {

// Second antiderivative of log|w|; I(c) = L(c+h) - 2 L(c) + L(c-h) is the
// exact integral of log|x-y| over a cell pair at center distance c.
double log_antideriv2(double w) {
  if (w == 0.0) return 0.0;
  return 0.5 * w * w * std::log(std::fabs(w)) - 0.75 * w * w;
}

}  // namespace

RateValue rate_functional(const GriddedMeasure& nu, double beta) {
  if (!(beta > 0.0)) throw ParameterError("rate_functional: beta must be positive");
  nu.validate();

  const std::size_t n = nu.grid.size();
  std::size_t support = 0;
  for (double m : nu.mass) {
    if (m > 0.0) ++support;
  }
  if (support <= 1) return {0.0, false};  // point mass: log-energy diverges

  const double h = nu.step();
  // Exact cell-pair averages of log|x-y| by lag; lag 0 gives log h - 3/2.
  std::vector<double> log_avg(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double c = h * static_cast<double>(k);
    log_avg[k] =
        (log_antideriv2(c + h) - 2.0 * log_antideriv2(c) + log_antideriv2(c - h)) /
        (h * h);
  }

  // Cell average of x^2 is center^2 + h^2/12.
  const double x2corr = h * h / 12.0;
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mi = nu.mass[i];
    if (mi == 0.0) continue;
    const double xi2 = nu.grid[i] * nu.grid[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double mj = nu.mass[j];
      if (mj == 0.0) continue;
      const std::size_t k = i > j ? i - j : j - i;
      const double g = 0.5 * (xi2 + nu.grid[j] * nu.grid[j]) + x2corr -
                       beta * log_avg[k];
      energy += mi * mj * g;
    }
  }

  const double constant = 0.25 * beta * std::log(0.5 * beta) - 0.375 * beta;
  return {0.5 * energy + constant, true};
}

ConcentrationResult concentration_check(int n, double beta, double t,
                                        int replicates,
                                        numerics::RngStream& rng,
                                        double c_constant) {
  if (replicates < 1) {
    throw ParameterError("concentration_check: replicates must be >= 1");
  }
  if (!(t > 0.0) || n < 2) {
    throw ParameterError("concentration_check: need t > 0 and n >= 2");
  }
  const ensembles::HermiteParams params{n, beta};
  const double threshold = std::sqrt(static_cast<double>(n)) * t;
  int hits = 0;
  for (int r = 0; r < replicates; ++r) {
    const auto s = ensembles::sample_hermite(params, rng);
    const double m = std::max(std::fabs(s.min()), std::fabs(s.max()));
    if (m >= threshold) ++hits;
  }
  ConcentrationResult res;
  res.empirical_prob = static_cast<double>(hits) / replicates;
  const double expo = -0.5 * n * t * t + c_constant * n * t;
  res.bound = c_constant * std::exp(std::min(expo, 700.0));
  return res;
}

}  // namespace rmtlab::ldp

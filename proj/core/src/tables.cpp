#include "rmtlab/tw/tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::tw {

std::string to_string(TableLabel label) {
  switch (label) {
    case TableLabel::f1: return "F1";
    case TableLabel::f2: return "F2";
    case TableLabel::f4: return "F4";
    case TableLabel::lambda0_1: return "Lambda0_1";
    case TableLabel::lambda0_2: return "Lambda0_2";
    case TableLabel::lambda0_4: return "Lambda0_4";
    case TableLabel::uplusv: return "UplusV";
  }
  return "?";
}

TableLabel table_label_from_string(const std::string& s) {
  if (s == "F1") return TableLabel::f1;
  if (s == "F2") return TableLabel::f2;
  if (s == "F4") return TableLabel::f4;
  if (s == "Lambda0_1") return TableLabel::lambda0_1;
  if (s == "Lambda0_2") return TableLabel::lambda0_2;
  if (s == "Lambda0_4") return TableLabel::lambda0_4;
  if (s == "UplusV") return TableLabel::uplusv;
  throw ParameterError("unknown table label: " + s);
}

double DistributionTable::cdf_at(double x) const {
  if (x <= grid.front()) return 0.0;
  if (x >= grid.back()) return 1.0;
  const double t = (x - grid.front()) / grid_step;
  const std::size_t i = std::min(static_cast<std::size_t>(t), grid.size() - 2);
  const double w = (x - grid[i]) / grid_step;
  return (1.0 - w) * cdf[i] + w * cdf[i + 1];
}

double DistributionTable::pdf_at(double x) const {
  if (x < grid.front() || x > grid.back()) return 0.0;
  const double t = (x - grid.front()) / grid_step;
  const std::size_t i = std::min(static_cast<std::size_t>(t), grid.size() - 2);
  const double w = (x - grid[i]) / grid_step;
  return (1.0 - w) * pdf[i] + w * pdf[i + 1];
}

double DistributionTable::quantile(double u) const {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw ParameterError("DistributionTable::quantile: u must be in (0,1)");
  }
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.begin()) return grid.front();
  if (it == cdf.end()) return grid.back();
  const std::size_t i = static_cast<std::size_t>(it - cdf.begin());
  const double c0 = cdf[i - 1], c1 = cdf[i];
  if (c1 == c0) return grid[i];
  const double w = (u - c0) / (c1 - c0);
  return grid[i - 1] + w * grid_step;
}

double DistributionTable::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    m += 0.5 * (grid[i] * pdf[i] + grid[i + 1] * pdf[i + 1]) * grid_step;
  }
  return m;
}

double DistributionTable::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = (grid[i] - m) * (grid[i] - m) * pdf[i];
    const double b = (grid[i + 1] - m) * (grid[i + 1] - m) * pdf[i + 1];
    v += 0.5 * (a + b) * grid_step;
  }
  return v;
}

namespace {

void finalize(DistributionTable& t) {
  // Clamp stray negatives in the far tails and enforce monotonicity; the
  // wiggles there are at the 1e-12 level.
  for (double& p : t.pdf) p = std::max(p, 0.0);
  double running = 0.0;
  for (double& c : t.cdf) {
    c = std::clamp(c, 0.0, 1.0);
    running = std::max(running, c);
    c = running;
  }
  if (t.cdf.front() > 1e-6 || t.cdf.back() < 1.0 - 1e-6) {
    throw NumericError("distribution table: CDF does not reach its limits within 1e-6");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < t.grid.size(); ++i) {
    mass += 0.5 * (t.pdf[i] + t.pdf[i + 1]) * t.grid_step;
  }
  if (std::fabs(mass - 1.0) > 1e-4) {
    throw NumericError("distribution table: pdf mass " + std::to_string(mass) +
                       " outside 1 +- 1e-4");
  }
}

}  // namespace

DistributionTable build_tw_table(int beta, const PainleveSolution& sol) {
  if (beta != 1 && beta != 2 && beta != 4) {
    throw DomainError("build_tw_table: beta must be 1, 2 or 4");
  }
  if (!(sol.x_start >= 8.0) || !(sol.x_end <= -10.0)) {
    throw InputError("build_tw_table: solution must cover [-10, 8]");
  }

  const std::size_t n = sol.grid.size();
  DistributionTable t;
  t.beta = static_cast<double>(beta);
  t.tol = sol.tol;
  t.grid.resize(n);
  t.cdf.resize(n);
  t.pdf.resize(n);

  // sol.grid is descending; tables are ascending.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    const double x = sol.grid[j];
    const double q = sol.q[j];
    const double g = sol.int_q2[j];   // int q^2
    const double f = sol.int_wq2[j];  // int (y-x) q^2
    const double jj = sol.int_q[j];   // int q

    switch (beta) {
      case 2: {
        t.grid[i] = x;
        const double f2 = std::exp(-f);
        t.cdf[i] = f2;
        t.pdf[i] = f2 * g;
        break;
      }
      case 1: {
        t.grid[i] = x;
        const double f1 = std::exp(-0.5 * (jj + f));
        t.cdf[i] = f1;
        t.pdf[i] = 0.5 * (q + g) * f1;
        break;
      }
      case 4: {
        // Stored in the halved argument: F4(x/sqrt(2)) = cosh(J/2) sqrt(F2(x)).
        t.grid[i] = x / std::sqrt(2.0);
        const double root_f2 = std::exp(-0.5 * f);
        t.cdf[i] = std::cosh(0.5 * jj) * root_f2;
        t.pdf[i] = std::sqrt(2.0) * 0.5 * root_f2 *
                   (g * std::cosh(0.5 * jj) - q * std::sinh(0.5 * jj));
        break;
      }
    }
  }
  t.grid_step = t.grid[1] - t.grid[0];
  t.label = beta == 1 ? TableLabel::f1 : (beta == 2 ? TableLabel::f2 : TableLabel::f4);
  finalize(t);
  return t;
}

double lambda0_cdf(const DistributionTable& fbeta, double x) {
  return std::clamp(1.0 - fbeta.cdf_at(-x), 0.0, 1.0);
}

DistributionTable lambda0_table(const DistributionTable& fbeta) {
  const std::size_t n = fbeta.grid.size();
  DistributionTable t;
  t.beta = fbeta.beta;
  t.tol = fbeta.tol;
  t.grid_step = fbeta.grid_step;
  t.grid.resize(n);
  t.cdf.resize(n);
  t.pdf.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    t.grid[i] = -fbeta.grid[j];
    t.cdf[i] = 1.0 - fbeta.cdf[j];
    t.pdf[i] = fbeta.pdf[j];
  }
  t.label = fbeta.beta == 1.0 ? TableLabel::lambda0_1
            : fbeta.beta == 2.0 ? TableLabel::lambda0_2
                                : TableLabel::lambda0_4;
  finalize(t);
  return t;
}

DistributionTable convolve_self(const DistributionTable& tw2) {
  if (tw2.label != TableLabel::f2) {
    throw InputError("convolve_self: input must be the F2 table");
  }
  const std::size_t n = tw2.grid.size();
  const double h = tw2.grid_step;

  DistributionTable c;
  c.label = TableLabel::uplusv;
  c.beta = 2.0;
  c.tol = tw2.tol;
  c.grid_step = h;
  const std::size_t m = 2 * n - 1;
  c.grid.resize(m);
  c.pdf.assign(m, 0.0);
  c.cdf.resize(m);

  const double lo = 2.0 * tw2.grid.front();
  for (std::size_t k = 0; k < m; ++k) c.grid[k] = lo + h * static_cast<double>(k);

  // pdf(s) = int f(u) f(s-u) du, Riemann sum on the shared grid.
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = tw2.pdf[i];
    if (fi == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      c.pdf[i + j] += fi * tw2.pdf[j];
    }
  }
  for (double& p : c.pdf) p *= h;

  double mass = 0.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    mass += 0.5 * (c.pdf[k] + c.pdf[k + 1]) * h;
  }
  if (std::fabs(mass - 1.0) > 1e-3) {
    throw NumericError("convolve_self: mass defect " + std::to_string(mass - 1.0) +
                       " exceeds 1e-3; grid too coarse");
  }
  for (double& p : c.pdf) p /= mass;

  double acc = 0.0;
  c.cdf[0] = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    acc += 0.5 * (c.pdf[k - 1] + c.pdf[k]) * h;
    c.cdf[k] = acc;
  }
  finalize(c);
  return c;
}

double critical_value(double alpha, const DistributionTable& conv) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw ParameterError("critical_value: alpha must lie in (0,1)");
  }
  if (conv.label != TableLabel::uplusv) {
    throw InputError("critical_value: table must be the U+V convolution");
  }
  const double target = 1.0 - alpha;
  const double s_max = std::max(std::fabs(conv.grid.front()), std::fabs(conv.grid.back()));
  auto two_sided = [&](double s) { return conv.cdf_at(s) - conv.cdf_at(-s); };
  if (two_sided(s_max) <= target) return s_max;
  double lo = 0.0, hi = s_max;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (two_sided(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace rmtlab::tw

#include "rmtlab/numerics/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InputError("EmpiricalSample: empty sample");
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("EmpiricalSample: non-finite entry");
  }
  std::sort(values_.begin(), values_.end());
}

double EmpiricalSample::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double EmpiricalSample::variance() const {
  if (values_.size() < 2) return 0.0;
  const double m = mean();
  double s = 0.0;
  for (double v : values_) s += (v - m) * (v - m);
  return s / static_cast<double>(values_.size() - 1);
}

double EmpiricalSample::median() const {
  const std::size_t n = values_.size();
  if (n % 2 == 1) return values_[n / 2];
  return 0.5 * (values_[n / 2 - 1] + values_[n / 2]);
}

double EmpiricalSample::ecdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) /
         static_cast<double>(values_.size());
}

double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf) {
  const auto& v = sample.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_distance_two_sample(const EmpiricalSample& a,
                              const EmpiricalSample& b) {
  const auto& va = a.values();
  const auto& vb = b.values();
  const double na = static_cast<double>(va.size());
  const double nb = static_cast<double>(vb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < va.size() && j < vb.size()) {
    const double t = std::min(va[i], vb[j]);
    while (i < va.size() && va[i] <= t) ++i;
    while (j < vb.size() && vb[j] <= t) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw InputError("correlation: vectors must be nonempty and equal length");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace rmtlab::numerics

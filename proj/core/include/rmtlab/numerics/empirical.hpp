#pragma once

#include <functional>
#include <vector>

namespace rmtlab::numerics {

/// Sorted sample of finite reals.
class EmpiricalSample {
 public:
  /// Sorts the values; throws InputError on an empty sample or non-finite
  /// entries.
  explicit EmpiricalSample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double mean() const;
  double variance() const;  // unbiased (n-1 denominator)
  double median() const;
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  /// Empirical CDF evaluated with right-continuous convention.
  double ecdf(double x) const;

 private:
  std::vector<double> values_;
};

/// Sup-norm distance between the empirical CDF of the sample and a model
/// CDF, evaluated exactly at the jump points.
double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_distance_two_sample(const EmpiricalSample& a,
                              const EmpiricalSample& b);

/// Pearson correlation of two equal-length vectors.
double correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace rmtlab::numerics

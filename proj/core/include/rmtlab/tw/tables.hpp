#pragma once

#include <string>
#include <vector>

#include "rmtlab/tw/painleve.hpp"

namespace rmtlab::tw {

enum class TableLabel {
  f1,
  f2,
  f4,
  lambda0_1,
  lambda0_2,
  lambda0_4,
  uplusv,
};

std::string to_string(TableLabel label);
TableLabel table_label_from_string(const std::string& s);

/// Tabulated CDF/PDF on a uniform ascending grid with monotone (linear)
/// interpolation. The CDF is clamped to [0,1], reaches both ends within
/// 1e-6, and the PDF integrates to 1 within 1e-4.
struct DistributionTable {
  std::vector<double> grid;  // ascending, uniform
  std::vector<double> cdf;
  std::vector<double> pdf;
  TableLabel label = TableLabel::f2;
  double beta = 2.0;
  double tol = 0.0;
  double grid_step = 0.0;

  double cdf_at(double x) const;  // clamped outside the grid
  double pdf_at(double x) const;  // 0 outside the grid
  double quantile(double u) const;

  /// Trapezoid moments of the tabulated PDF.
  double mean() const;
  double variance() const;
};

/// Tracy-Widom table for beta in {1, 2, 4} from a Painleve solution
/// covering [-10, 8]. F2 = exp(-int (y-x) q^2); F1 and F4 from the product
/// formulas with exp/cosh of the q tail integral. The F4 table is stored in
/// the halved-argument convention (grid x/sqrt(2), see build notes); PDFs
/// are analytic derivatives, never finite differences.
DistributionTable build_tw_table(int beta, const PainleveSolution& sol);

/// CDF of the smallest-eigenvalue limit: P(Lambda0 <= x) = 1 - F_beta(-x),
/// by reflection of the table with interpolation, clamped to [0,1].
double lambda0_cdf(const DistributionTable& fbeta, double x);

/// Materialized reflection table (label lambda0_<beta>).
DistributionTable lambda0_table(const DistributionTable& fbeta);

/// Law of U+V for U, V i.i.d. F2: discrete self-convolution of the F2 pdf,
/// renormalized to unit mass. A mass defect above 1e-3 before
/// renormalization throws NumericError.
DistributionTable convolve_self(const DistributionTable& tw2);

/// The unique s > 0 with P(|U+V| > s) = alpha, i.e. CDF(s) - CDF(-s) =
/// 1 - alpha, found by bisection on the tabulated CDF.
double critical_value(double alpha, const DistributionTable& conv);

}  // namespace rmtlab::tw

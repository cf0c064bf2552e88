#pragma once

#include <vector>

namespace rmtlab::tw {

/// Airy function values and tail integrals from the large-x asymptotic
/// expansion (optimal truncation). Valid for x >= 6, where the truncation
/// error is far below double roundoff on Ai itself.
struct AiryTail {
  double ai = 0.0;      // Ai(x)
  double aip = 0.0;     // Ai'(x)
  double int_ai = 0.0;  // integral of Ai over (x, inf)
  double int_ai2 = 0.0; // integral of Ai^2 over (x, inf)
  double int_w_ai2 = 0.0;  // integral of (y-x)*Ai(y)^2 over (x, inf)
};

AiryTail airy_tail(double x);

/// The Hastings-McLeod solution of q'' = x q + 2 q^3 together with the tail
/// integrals needed to assemble the Tracy-Widom distributions, tabulated on
/// a uniform grid descending from x_start to x_end.
struct PainleveSolution {
  std::vector<double> grid;      // descending, uniform step
  std::vector<double> q;         // q > 0 everywhere on the grid
  std::vector<double> dq;        // q'
  std::vector<double> int_q2;    // integral of q^2 over (x, inf)
  std::vector<double> int_wq2;   // integral of (y-x)*q^2 over (x, inf)
  std::vector<double> int_q;     // integral of q over (x, inf)
  double x_start = 0.0;
  double x_end = 0.0;
  double tol = 0.0;
  double grid_step = 0.0;
};

/// Integrates the augmented system (q, q', and the three tail integrals)
/// downward from x_start, with boundary data taken from the Airy
/// asymptotics. Local error per step is held at tol (relative). Losing the
/// positive Hastings-McLeod branch (blow-up or a sign crossing) throws
/// NumericError naming the divergence point.
///
/// Preconditions: x_start >= 6 and x_end <= -8.
PainleveSolution solve_painleve2(double x_start = 8.0, double x_end = -10.0,
                                 double tol = 1e-12, double grid_step = 0.005);

}  // namespace rmtlab::tw

#include "rmtlab/numerics/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

// Implicit QL with Wilkinson shifts, derived from the Algol procedure tql1
// (Bowdler, Martin, Reinsch, Wilkinson) and its EISPACK descendants.
std::vector<double> eigenvalues(const SymTridiagonal& T, double tol) {
  const std::size_t n = T.size();
  if (n == 0) return {};
  if (T.offdiag.size() + 1 != n) {
    throw InputError("tridiagonal eigenvalues: offdiag length must be n-1");
  }
  if (!(tol > 0.0)) {
    throw ParameterError("tridiagonal eigenvalues: tol must be positive");
  }

  std::vector<double> d = T.diag;
  std::vector<double> e = T.offdiag;
  e.push_back(0.0);

  const std::size_t sweep_cap = 50 * n;
  std::size_t sweeps = 0;

  for (std::size_t l = 0; l < n; ++l) {
    for (;;) {
      // Look for a negligible off-diagonal element to split at.
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= tol * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++sweeps > sweep_cap) {
        throw NumericError(
            "tridiagonal eigenvalues: no convergence after " +
            std::to_string(sweep_cap) + " sweeps (index " + std::to_string(l) +
            ", residual " + std::to_string(e[l]) + ")");
      }

      // Wilkinson shift from the leading 2x2, then one implicit QL sweep.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace rmtlab::numerics

#pragma once

#include <cstddef>
#include <vector>

namespace rmtlab::numerics {

/// Real symmetric tridiagonal matrix: diag has length n, offdiag n-1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

/// All eigenvalues of T, ascending. Implicitly shifted QL with Wilkinson
/// shifts, eigenvalues only (EISPACK tql1 lineage); tol scales the
/// off-diagonal deflation threshold, so eigenvalues come out accurate to
/// about tol times the spectral scale. Sweeps are capped at 50*n; hitting
/// the cap throws NumericError with the stuck index.
std::vector<double> eigenvalues(const SymTridiagonal& T, double tol = 1e-15);

}  // namespace rmtlab::numerics

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rmtlab/numerics/tridiagonal.hpp"

namespace rmtlab::numerics {

/// Dense complex Hermitian matrix, row-major full storage.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n)
      : n_(n), a_(n * n, std::complex<double>(0.0, 0.0)) {}

  /// Assemble from separate real and imaginary grids (each n*n, row-major).
  static HermitianMatrix from_parts(std::size_t n,
                                    const std::vector<double>& re,
                                    const std::vector<double>& im);

  std::size_t size() const { return n_; }

  std::complex<double>& operator()(std::size_t i, std::size_t j) {
    return a_[i * n_ + j];
  }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

/// Unitary (Householder) reduction to real symmetric tridiagonal form. The
/// off-diagonal picks up the moduli of the complex couplings (the phases are
/// absorbed by a diagonal unitary), so the eigenvalues are preserved.
SymTridiagonal tridiagonalize(const HermitianMatrix& H);

/// All eigenvalues of H, ascending: Householder reduction followed by the
/// tridiagonal QL solve. Throws InputError if H deviates from Hermitian by
/// more than 1e-10 relative to its largest entry.
std::vector<double> eigenvalues(const HermitianMatrix& H);

}  // namespace rmtlab::numerics

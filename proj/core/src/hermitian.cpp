#include "rmtlab/numerics/hermitian.hpp"

#include <cmath>
#include <string>

#include "rmtlab/errors.hpp"

namespace rmtlab::numerics {

HermitianMatrix HermitianMatrix::from_parts(std::size_t n,
                                            const std::vector<double>& re,
                                            const std::vector<double>& im) {
  if (re.size() != n * n || im.size() != n * n) {
    throw InputError("HermitianMatrix::from_parts: grids must have n*n entries");
  }
  HermitianMatrix H(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    H.a_[i] = std::complex<double>(re[i], im[i]);
  }
  return H;
}

namespace {

void check_hermitian(const HermitianMatrix& H) {
  const std::size_t n = H.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      scale = std::max(scale, std::abs(H(i, j)));
    }
  }
  if (scale == 0.0) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::complex<double> diff = H(i, j) - std::conj(H(j, i));
      if (std::abs(diff) > 1e-10 * scale) {
        throw InputError("hermitian eigenvalues: matrix is not Hermitian at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

SymTridiagonal tridiagonalize(const HermitianMatrix& H) {
  const std::size_t n = H.size();
  HermitianMatrix A = H;
  std::vector<std::complex<double>> v(n), p(n), w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the column below the diagonal
    double sigma2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) sigma2 += std::norm(A(i, k));
    const double sigma = std::sqrt(sigma2);
    if (sigma == 0.0) continue;

    const std::complex<double> alpha = A(k + 1, k);
    const std::complex<double> phase =
        (alpha == std::complex<double>(0.0, 0.0)) ? 1.0 : alpha / std::abs(alpha);

    // v = x + phase*sigma*e1 gives the reflector with H x = -phase*sigma*e1.
    for (std::size_t i = 0; i < m; ++i) v[i] = A(k + 1 + i, k);
    v[0] += phase * sigma;
    const double vnorm2 = 2.0 * (sigma2 + sigma * std::abs(alpha));
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // Rank-2 update of the trailing block: B -= q v* + v q*.
    for (std::size_t i = 0; i < m; ++i) {
      std::complex<double> acc(0.0, 0.0);
      for (std::size_t j = 0; j < m; ++j) acc += A(k + 1 + i, k + 1 + j) * v[j];
      p[i] = tau * acc;
    }
    std::complex<double> vp(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
    const std::complex<double> kappa = 0.5 * tau * vp;
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kappa * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        A(k + 1 + i, k + 1 + j) -=
            v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
      }
    }

    A(k + 1, k) = -phase * sigma;
    for (std::size_t i = k + 2; i < n; ++i) A(i, k) = 0.0;
  }

  SymTridiagonal T;
  T.diag.resize(n);
  T.offdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) T.diag[i] = A(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) T.offdiag[i] = std::abs(A(i + 1, i));
  return T;
}

std::vector<double> eigenvalues(const HermitianMatrix& H) {
  check_hermitian(H);
  if (H.size() == 0) return {};
  return eigenvalues(tridiagonalize(H));
}

}  // namespace rmtlab::numerics

#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "rmtlab/ensembles/ensembles.hpp"
#include "rmtlab/ldp/ldp.hpp"

namespace rmtlab::io {

/// Spectrum as CSV (`index,value`) plus a JSON sidecar next to it
/// ({ensemble, n, p, beta, master_seed, stream_index}); p is null for
/// Hermite draws. Sidecar path is the CSV path with extension .json.
void write_spectrum(const ensembles::Spectrum& s,
                    const std::filesystem::path& csv_path);

/// GriddedMeasure as CSV (`x,mass`) plus a JSON sidecar
/// ({grid_step, beta_context}).
void write_measure(const ldp::GriddedMeasure& nu, double beta_context,
                   const std::filesystem::path& csv_path);

/// n x p complex data matrix, row-major.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data;

  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

/// Reads a complex data matrix: one row per observation, 2p numeric columns
/// alternating real/imaginary (re_1,im_1,...,re_p,im_p). A leading header
/// row is skipped if its first field is not numeric. Malformed content
/// throws ParseError carrying the row/column location.
ComplexMatrix read_complex_matrix_csv(const std::filesystem::path& path);

}  // namespace rmtlab::io

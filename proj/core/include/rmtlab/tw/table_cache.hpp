#pragma once

#include <filesystem>
#include <optional>

#include "rmtlab/tw/tables.hpp"

namespace rmtlab::tw {

struct TableKey {
  TableLabel label = TableLabel::f2;
  double tol = 1e-12;
  double grid_step = 0.005;
};

/// RMTLAB_CACHE if set, else ~/.cache/rmtlab, else <tmp>/rmtlab_cache.
std::filesystem::path default_cache_dir();

/// Writes <dir>/<key>.csv (columns x,cdf,pdf) plus a .json metadata sidecar
/// {label, beta, tol, grid_step, builder_version}. The key's grid_step is
/// the Painleve build step (the F4 table itself is stored on a
/// sqrt(2)-finer grid). Returns the CSV path.
std::filesystem::path save_table(const DistributionTable& table,
                                 const TableKey& key,
                                 const std::filesystem::path& dir);

/// Loads a cached table if present and its metadata matches the key and the
/// current builder version.
std::optional<DistributionTable> load_table(const TableKey& key,
                                            const std::filesystem::path& dir);

/// Load-or-build. Builds the Painleve solution once per call when the cache
/// misses; lambda0 and U+V labels derive from the matching F table.
DistributionTable cached_table(const TableKey& key,
                               const std::filesystem::path& dir);

}  // namespace rmtlab::tw

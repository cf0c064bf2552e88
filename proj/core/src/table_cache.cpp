#include "rmtlab/tw/table_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rmtlab/errors.hpp"
#include "rmtlab/version.hpp"

namespace rmtlab::tw {

namespace fs = std::filesystem;
using nlohmann::json;

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("RMTLAB_CACHE")) return fs::path(env);
  if (const char* home = std::getenv("HOME")) {
    return fs::path(home) / ".cache" / "rmtlab";
  }
  return fs::temp_directory_path() / "rmtlab_cache";
}

namespace {

std::string key_stem(TableLabel label, double tol, double grid_step) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s_tol%.3g_h%.6g", to_string(label).c_str(),
                tol, grid_step);
  return buf;
}

}  // namespace

std::filesystem::path save_table(const DistributionTable& table,
                                 const TableKey& key, const fs::path& dir) {
  fs::create_directories(dir);
  const std::string stem = key_stem(key.label, key.tol, key.grid_step);
  const fs::path csv_path = dir / (stem + ".csv");
  const fs::path json_path = dir / (stem + ".json");

  std::ofstream csv(csv_path);
  if (!csv) throw InputError("save_table: cannot write " + csv_path.string());
  csv << "x,cdf,pdf\n";
  char line[160];
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", table.grid[i],
                  table.cdf[i], table.pdf[i]);
    csv << line;
  }

  json meta;
  meta["label"] = to_string(table.label);
  meta["beta"] = table.beta;
  meta["tol"] = key.tol;
  meta["grid_step"] = key.grid_step;
  meta["builder_version"] = kTableBuilderVersion;
  std::ofstream js(json_path);
  js << meta.dump(2) << "\n";
  return csv_path;
}

std::optional<DistributionTable> load_table(const TableKey& key,
                                            const fs::path& dir) {
  const std::string stem = key_stem(key.label, key.tol, key.grid_step);
  const fs::path csv_path = dir / (stem + ".csv");
  const fs::path json_path = dir / (stem + ".json");
  if (!fs::exists(csv_path) || !fs::exists(json_path)) return std::nullopt;

  json meta;
  try {
    std::ifstream js(json_path);
    js >> meta;
  } catch (...) {
    return std::nullopt;
  }
  if (meta.value("label", "") != to_string(key.label) ||
      meta.value("builder_version", "") != kTableBuilderVersion ||
      meta.value("tol", 0.0) != key.tol ||
      meta.value("grid_step", 0.0) != key.grid_step) {
    return std::nullopt;
  }

  DistributionTable t;
  t.label = key.label;
  t.beta = meta.value("beta", 0.0);
  t.tol = key.tol;

  std::ifstream csv(csv_path);
  std::string line;
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    double x, c, p;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &x, &c, &p) != 3) {
      return std::nullopt;
    }
    t.grid.push_back(x);
    t.cdf.push_back(c);
    t.pdf.push_back(p);
  }
  if (t.grid.size() < 2) return std::nullopt;
  t.grid_step = t.grid[1] - t.grid[0];
  return t;
}

DistributionTable cached_table(const TableKey& key, const fs::path& dir) {
  if (auto hit = load_table(key, dir)) return *hit;

  auto fkey_for = [&](TableLabel lbl) {
    TableKey k = key;
    k.label = lbl;
    return k;
  };

  auto build_f = [&](int beta) {
    TableLabel lbl = beta == 1 ? TableLabel::f1
                     : beta == 2 ? TableLabel::f2
                                 : TableLabel::f4;
    if (auto hit = load_table(fkey_for(lbl), dir)) return *hit;
    const PainleveSolution sol =
        solve_painleve2(8.0, -10.0, key.tol, key.grid_step);
    DistributionTable t = build_tw_table(beta, sol);
    save_table(t, fkey_for(lbl), dir);
    return t;
  };

  DistributionTable result;
  switch (key.label) {
    case TableLabel::f1: result = build_f(1); break;
    case TableLabel::f2: result = build_f(2); break;
    case TableLabel::f4: result = build_f(4); break;
    case TableLabel::lambda0_1: result = lambda0_table(build_f(1)); break;
    case TableLabel::lambda0_2: result = lambda0_table(build_f(2)); break;
    case TableLabel::lambda0_4: result = lambda0_table(build_f(4)); break;
    case TableLabel::uplusv: result = convolve_self(build_f(2)); break;
  }
  if (key.label != TableLabel::f1 && key.label != TableLabel::f2 &&
      key.label != TableLabel::f4) {
    save_table(result, key, dir);
  }
  return result;
}

}  // namespace rmtlab::tw

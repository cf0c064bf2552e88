#include "rmtlab/io/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rmtlab/errors.hpp"

namespace rmtlab::io {

namespace fs = std::filesystem;
using nlohmann::json;

void write_spectrum(const ensembles::Spectrum& s, const fs::path& csv_path) {
  std::ofstream csv(csv_path);
  if (!csv) throw InputError("write_spectrum: cannot write " + csv_path.string());
  csv << "index,value\n";
  char line[64];
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    std::snprintf(line, sizeof(line), "%zu,%.17g\n", i, s.values[i]);
    csv << line;
  }

  json meta;
  meta["ensemble"] =
      s.info.kind == ensembles::EnsembleKind::hermite ? "hermite" : "laguerre";
  meta["n"] = s.info.n;
  if (s.info.kind == ensembles::EnsembleKind::laguerre) {
    meta["p"] = s.info.p;
  } else {
    meta["p"] = nullptr;
  }
  meta["beta"] = s.info.beta;
  meta["master_seed"] = s.info.seed.master_seed;
  meta["stream_index"] = s.info.seed.stream_index;

  fs::path json_path = csv_path;
  json_path.replace_extension(".json");
  std::ofstream js(json_path);
  js << meta.dump(2) << "\n";
}

void write_measure(const ldp::GriddedMeasure& nu, double beta_context,
                   const fs::path& csv_path) {
  std::ofstream csv(csv_path);
  if (!csv) throw InputError("write_measure: cannot write " + csv_path.string());
  csv << "x,mass\n";
  char line[80];
  for (std::size_t i = 0; i < nu.grid.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", nu.grid[i], nu.mass[i]);
    csv << line;
  }
  json meta;
  meta["grid_step"] = nu.step();
  meta["beta_context"] = beta_context;
  fs::path json_path = csv_path;
  json_path.replace_extension(".json");
  std::ofstream js(json_path);
  js << meta.dump(2) << "\n";
}

namespace {

bool parse_double(const std::string& field, double* out) {
  char* end = nullptr;
  const char* begin = field.c_str();
  *out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
  return *end == '\0';
}

}  // namespace

ComplexMatrix read_complex_matrix_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("read_complex_matrix_csv: cannot open " + path.string());

  ComplexMatrix mat;
  std::string line;
  std::size_t row = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string field;
    std::size_t col = 0;
    bool header = false;
    while (std::getline(ss, field, ',')) {
      ++col;
      double v;
      if (!parse_double(field, &v)) {
        if (first_line && col == 1) {
          header = true;
          break;  // tolerate a header row
        }
        throw ParseError("read_complex_matrix_csv: " + path.string() + ": row " +
                         std::to_string(row) + ", column " + std::to_string(col) +
                         ": not a number: '" + field + "'");
      }
      fields.push_back(v);
    }
    first_line = false;
    if (header) continue;
    if (fields.size() % 2 != 0) {
      throw ParseError("read_complex_matrix_csv: " + path.string() + ": row " +
                       std::to_string(row) +
                       ": odd column count (need re/im pairs)");
    }
    const std::size_t p = fields.size() / 2;
    if (mat.cols == 0) {
      mat.cols = p;
    } else if (p != mat.cols) {
      throw ParseError("read_complex_matrix_csv: " + path.string() + ": row " +
                       std::to_string(row) + ": expected " +
                       std::to_string(2 * mat.cols) + " columns, got " +
                       std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < p; ++j) {
      mat.data.emplace_back(fields[2 * j], fields[2 * j + 1]);
    }
    ++mat.rows;
  }
  if (mat.rows == 0) {
    throw ParseError("read_complex_matrix_csv: " + path.string() + ": no data rows");
  }
  return mat;
}

}  // namespace rmtlab::io

#include "imbcluster/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace imbcluster {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
      cell.pop_back();
    std::size_t b = 0;
    while (b < cell.size() && cell[b] == ' ') ++b;
    cells.push_back(cell.substr(b));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path,
                  const CsvReadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path.string());

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_row(line));
  }
  CsvTable table;
  if (rows.empty()) return table;

  bool header;
  if (options.header.has_value()) {
    header = *options.header;
  } else {
    double tmp;
    header = false;
    for (const auto& cell : rows.front())
      if (!parse_double(cell, tmp)) header = true;
  }
  table.had_header = header;

  const std::size_t cols = rows.front().size();
  int weight_col = -1;
  int label_col = -1;
  if (header) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows.front()[c] == "weight") weight_col = static_cast<int>(c);
      if (rows.front()[c] == "label") label_col = static_cast<int>(c);
    }
  } else {
    if (options.trailing_label) label_col = static_cast<int>(cols - 1);
    if (options.trailing_weight)
      weight_col = static_cast<int>(cols - 1 - (options.trailing_label ? 1 : 0));
  }

  std::size_t dim = cols;
  if (weight_col >= 0) --dim;
  if (label_col >= 0) --dim;
  if (dim == 0) throw std::runtime_error("read_csv: no coordinate columns");

  if (weight_col >= 0) table.weights.emplace();
  if (label_col >= 0) table.labels.emplace();

  std::vector<double> point(dim);
  for (std::size_t r = header ? 1 : 0; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != cols)
      throw std::runtime_error("read_csv: ragged row " + std::to_string(r + 1));
    std::size_t d = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      double v;
      if (!parse_double(cells[c], v))
        throw std::runtime_error("read_csv: bad number '" + cells[c] + "'");
      if (static_cast<int>(c) == weight_col)
        table.weights->push_back(v);
      else if (static_cast<int>(c) == label_col)
        table.labels->push_back(static_cast<int>(v));
      else
        point[d++] = v;
    }
    table.points.push_back(point);
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const PointSet& points,
               const CsvWriteOptions& options,
               const std::vector<double>* weights,
               const std::vector<int>* labels) {
  if (weights && weights->size() != points.size())
    throw std::invalid_argument("write_csv: weight count mismatch");
  if (labels && labels->size() != points.size())
    throw std::invalid_argument("write_csv: label count mismatch");

  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());

  const std::size_t d = points.dim();
  if (options.header) {
    for (std::size_t c = 0; c < d; ++c) {
      if (c) out << ',';
      out << 'x' << c;
    }
    if (weights) out << ",weight";
    if (labels) out << ",label";
    out << '\n';
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t c = 0; c < d; ++c) {
      if (c) out << ',';
      out << format_double(p[c]);
    }
    if (weights) out << ',' << format_double((*weights)[i]);
    if (labels) out << ',' << (*labels)[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed " + path.string());
}

}  // namespace imbcluster

#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "imbcluster/points.hpp"

namespace imbcluster {

// One point per row, d coordinate columns, optional "weight" and "label"
// columns. With a header the columns are identified by name; without one the
// read options say which trailing columns are present.
struct CsvTable {
  PointSet points;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<int>> labels;
  bool had_header = false;
};

struct CsvReadOptions {
  std::optional<bool> header;   // unset: auto-detect (non-numeric first row)
  bool trailing_weight = false; // headerless files only
  bool trailing_label = false;  // headerless files only (label after weight)
};

CsvTable read_csv(const std::filesystem::path& path,
                  const CsvReadOptions& options = {});

struct CsvWriteOptions {
  bool header = true;
};

void write_csv(const std::filesystem::path& path, const PointSet& points,
               const CsvWriteOptions& options = {},
               const std::vector<double>* weights = nullptr,
               const std::vector<int>* labels = nullptr);

}  // namespace imbcluster

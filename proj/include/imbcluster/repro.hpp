#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "imbcluster/points.hpp"

namespace imbcluster {

// One clustering outcome inside an experiment run.
struct ReproRow {
  std::size_t run = 0;
  std::string dataset;
  std::string method;
  double fitting = 0.0;
  double relaxed = 0.0;
  double variance = 0.0;  // hierarchical experiments only
  double time_ms = 0.0;
  int separated = -1;  // 1/0 where separation is defined, -1 otherwise
};

struct QuartileStat {
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

struct ReproSummary {
  std::string experiment;
  std::size_t runs = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<ReproRow> rows;
  // e.g. "fig1/approx-on-coreset" -> separation rate
  std::map<std::string, double> rates;
  // keyed "dataset/method/metric"; losses are also reported normalized by
  // the exact enumeration when it is affordable
  std::map<std::string, QuartileStat> stats;
};

QuartileStat quartiles(std::vector<double> values);

// Experiments: fig1, fig2, appendixG1, appendixG2. Per-run seeds are
// seed + run index.
ReproSummary run_experiment(const std::string& experiment, std::size_t runs,
                            std::size_t n, std::uint64_t seed);

// True when one predicted cluster contains every point of outlier_label and
// nothing else.
bool isolates_outliers(std::span<const int> pred, std::span<const int> truth,
                       int outlier_label);

}  // namespace imbcluster

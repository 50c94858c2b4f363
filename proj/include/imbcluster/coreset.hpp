#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "imbcluster/bicriteria.hpp"
#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

struct CoresetParams {
  std::size_t k = 2;
  double delta = 0.1;    // failure bound, in (0, 1/10]
  double epsilon = 0.5;  // coreset error, in (0, 1)
  AlgoMode mode = AlgoMode::Practical;
  // Practical mode uses 128 unless overridden; Theoretical mode evaluates
  // the sample-size formula below with constant c_const.
  std::optional<std::size_t> lambda_override;
  double c_const = 1.0;
};

// Theoretical sample size:
//   ceil(c * log2(k+1) * log2(n)^4 / eps^2
//        * (k * d^3 * log2(log2(k+1)*log2(n) + 1) + log2(1/delta)))
// The +1 offsets keep the logs positive at k=1 and tiny n; the stated bound
// only fixes the value up to a constant.
std::size_t coreset_lambda(const CoresetParams& params, std::size_t n,
                           std::size_t dim);

// Sensitivity-sampled coreset. data holds the center prefix (center_count
// rows) followed by the sampled points; total weight is exactly the input
// size. Center weights may be negative.
struct Coreset {
  WeightedSet data;
  std::size_t center_count = 0;
  std::size_t lambda = 0;  // sample size the build resolved to
  CoresetParams params;
  std::uint64_t seed = 0;
};

// Per-point sampling distribution l_p / sum(l_p) with
// l_p = ||p - c_p|| / log2^2(|P_c|+1), plus the per-center cluster sizes.
// Throws when every l_p is zero; callers short-circuit that case.
struct Sensitivities {
  std::vector<double> s;
  std::vector<std::size_t> cluster_sizes;
};
Sensitivities sensitivities(const PointSet& points, const PointSet& centers);

// lambda i.i.d. draws from s; each draw carries weight 1/(lambda*s(p)).
// Repeated indices stay separate entries.
std::vector<std::pair<std::size_t, double>> sensitivity_sample(
    std::span<const double> s, std::size_t lambda, Rng& rng);

Coreset build_coreset(const PointSet& points, const CoresetParams& params,
                      Rng& rng);

// CSV (coordinates + weight column) plus a JSON sidecar carrying params,
// seed and center_count.
void save_coreset(const Coreset& coreset, const std::filesystem::path& csv_path,
                  const std::filesystem::path& sidecar_path);
Coreset load_coreset(const std::filesystem::path& csv_path,
                     const std::filesystem::path& sidecar_path);

}  // namespace imbcluster

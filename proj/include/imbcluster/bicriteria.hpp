#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

enum class AlgoMode { Theoretical, Practical };

struct BiCriteriaParams {
  std::size_t k = 2;
  double delta = 0.1;  // failure bound, in (0, 1/10]
  AlgoMode mode = AlgoMode::Practical;
  // Practical mode uses 64 unless overridden; Theoretical mode uses
  // ceil(c_const * k^2 * log2(n/delta)).
  std::optional<std::size_t> lambda_override;
  double c_const = 1.0;
  // Guard for the practical terminal enumeration over the remainder.
  double approx_budget = 1e9;
};

std::size_t bicriteria_lambda(const BiCriteriaParams& params, std::size_t n);

// Indices of the ceil(gamma*|P|) points nearest q, ascending index order.
// Distance ties go to the lower index. Uses partial selection, not a sort.
std::vector<std::size_t> closest(const PointSet& points,
                                 std::span<const double> q, double gamma);
std::vector<std::size_t> closest_n(const PointSet& points,
                                   std::span<const double> q,
                                   std::size_t count);

struct RobustMedian {
  std::size_t index = 0;  // position in the sample
  double loss = 0.0;      // fitting loss of the closest set around it
};

// Every sample point is scored as the single center of its
// max(1, floor(15|S|/(16k))) closest sample points (itself included); the
// candidate with the smallest fitting loss wins, ties to the lowest index.
RobustMedian robust_median_of_sample(const PointSet& sample, std::size_t k,
                                     std::optional<std::size_t> closest_override = {});

// Per-iteration trace, mainly for tests: the surviving set size before each
// iteration and after the loop.
struct BiCriteriaStats {
  std::size_t lambda = 0;
  std::vector<std::size_t> alive_sizes;
};

// Repeatedly pulls a uniform sample of size lambda from the surviving
// points, takes its robust median, removes the max(1, floor(3|P'|/(4k)))
// surviving points closest to it, and collects the median into B. The
// remainder joins B as-is in Theoretical mode and is replaced by its exact
// k-subset minimizer in Practical mode.
PointSet bicriteria(const PointSet& points, const BiCriteriaParams& params,
                    Rng& rng, BiCriteriaStats* stats = nullptr);

}  // namespace imbcluster

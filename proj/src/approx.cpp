#include "imbcluster/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace imbcluster {

double enumeration_cost(std::size_t n, std::size_t k, std::size_t dim) {
  double comb = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    comb *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (comb > 1e300) return std::numeric_limits<double>::infinity();
  }
  return comb * static_cast<double>(n) * static_cast<double>(dim) *
         static_cast<double>(k);
}

namespace {

// matches the loss kernel's divisor bit for bit
double size_divisor(Objective objective, double n_c) {
  if (objective == Objective::Fitting) return n_c + 1.0;
  const double l = std::log2(n_c + 1.0);
  return l * l;
}

// cache point-to-point distances only while the matrices stay small
constexpr std::size_t kMatrixCap = 4096;

struct Scratch {
  std::vector<double> sums;
  std::vector<double> masses;
  std::vector<std::size_t> counts;
};

// Loss of one candidate index tuple. Per-cluster accumulators receive their
// members in index order, exactly like the loss kernel, so the result is
// bit-identical to weighted_loss on the same centers. negative_cluster is
// set when some cluster's weighted distance sum is negative.
double tuple_loss(const WeightedSet& data, std::span<const std::size_t> comb,
                  const double* d2_cache, const double* dist_cache,
                  const ApproxOptions& options, Scratch& scratch,
                  bool& negative_cluster) {
  const std::size_t n = data.points.size();
  const std::size_t k = comb.size();
  std::fill(scratch.sums.begin(), scratch.sums.end(), 0.0);
  std::fill(scratch.masses.begin(), scratch.masses.end(), 0.0);
  std::fill(scratch.counts.begin(), scratch.counts.end(), 0);

  // the caches are symmetric and indexed center-major, so the scans below
  // stream contiguously over i
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    double best_d2;
    if (d2_cache) {
      best_d2 = d2_cache[comb[0] * n + i];
      for (std::size_t c = 1; c < k; ++c) {
        const double v = d2_cache[comb[c] * n + i];
        if (v < best_d2) {
          best_d2 = v;
          best = c;
        }
      }
    } else {
      best_d2 = squared_dist(data.points[i], data.points[comb[0]]);
      for (std::size_t c = 1; c < k; ++c) {
        const double v = squared_dist(data.points[i], data.points[comb[c]]);
        if (v < best_d2) {
          best_d2 = v;
          best = c;
        }
      }
    }
    const double dist = dist_cache ? dist_cache[comb[best] * n + i]
                                   : std::sqrt(best_d2);
    const double w = data.weights[i];
    scratch.sums[best] += w * dist;
    scratch.masses[best] += w;
    scratch.counts[best] += 1;
  }

  double total = 0.0;
  negative_cluster = false;
  for (std::size_t c = 0; c < k; ++c) {
    if (scratch.counts[c] == 0) continue;
    if (scratch.sums[c] < 0.0) negative_cluster = true;
    const double n_c = options.size_source == SizeSource::Cardinality
                           ? static_cast<double>(scratch.counts[c])
                           : std::max(scratch.masses[c], 1.0);
    total += scratch.sums[c] / size_divisor(options.objective, n_c);
  }
  return total;
}

}  // namespace

ApproxResult exhaustive_approx(const WeightedSet& data, std::size_t k,
                               const ApproxOptions& options) {
  const std::size_t n = data.points.size();
  if (k == 0) throw std::invalid_argument("exhaustive_approx: k must be >= 1");
  if (n < k)
    throw std::invalid_argument("exhaustive_approx: fewer points than k");
  if (data.weights.size() != n)
    throw std::invalid_argument("exhaustive_approx: weight count mismatch");

  const std::size_t d = data.points.dim();
  const double cost = enumeration_cost(n, k, d);
  if (cost > options.max_cost)
    throw std::runtime_error(
        "exhaustive_approx: enumeration cost " + std::to_string(cost) +
        " exceeds budget " + std::to_string(options.max_cost) +
        "; build a coreset first and enumerate over it");

  std::vector<double> d2_cache, dist_cache;
  if (n <= kMatrixCap) {
    d2_cache.resize(n * n);
    dist_cache.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const double d2 = squared_dist(data.points[i], data.points[j]);
        d2_cache[i * n + j] = d2;
        d2_cache[j * n + i] = d2;
        const double dist = std::sqrt(d2);
        dist_cache[i * n + j] = dist;
        dist_cache[j * n + i] = dist;
      }
    }
  }

  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  Scratch scratch{std::vector<double>(k), std::vector<double>(k),
                  std::vector<std::size_t>(k)};

  // A tuple with two coinciding points is not a size-k subset (it degrades
  // to k-1 centers), and a cluster whose weighted distance sum is negative
  // can only be a sampling artifact of negative coreset weights — every
  // true cluster sum is nonnegative. Both leave the argmin domain; if
  // nothing qualifies (duplicate-only data), the plain argmin is returned.
  std::vector<std::size_t> best_comb, fallback_comb;
  double best_loss = std::numeric_limits<double>::infinity();
  double fallback_loss = std::numeric_limits<double>::infinity();

  for (;;) {
    bool negative_cluster = false;
    const double loss =
        tuple_loss(data, comb, d2_cache.empty() ? nullptr : d2_cache.data(),
                   dist_cache.empty() ? nullptr : dist_cache.data(), options,
                   scratch, negative_cluster);
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i)
      for (std::size_t j = i + 1; j < k && distinct; ++j) {
        const auto a = data.points[comb[i]];
        const auto b = data.points[comb[j]];
        if (std::equal(a.begin(), a.end(), b.begin())) distinct = false;
      }

    if (distinct && !negative_cluster && loss < best_loss) {
      best_loss = loss;
      best_comb = comb;
    }
    if (loss < fallback_loss) {
      fallback_loss = loss;
      fallback_comb = comb;
    }

    // next lexicographic combination
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }

  ApproxResult out;
  out.indices = best_comb.empty() ? fallback_comb : best_comb;
  out.loss = best_comb.empty() ? fallback_loss : best_loss;
  out.centers = data.points.subset(out.indices);
  return out;
}

ApproxResult exhaustive_approx(const PointSet& points, std::size_t k,
                               const ApproxOptions& options) {
  return exhaustive_approx(WeightedSet::unit(points), k, options);
}

}  // namespace imbcluster

#include "imbcluster/kmeanspp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace imbcluster {

std::vector<std::size_t> dsquared_seed_indices(const PointSet& points,
                                               std::size_t k, Rng& rng) {
  const std::size_t n = points.size();
  if (k == 0) throw std::invalid_argument("dsquared_seed: k must be >= 1");
  if (n < k) throw std::invalid_argument("dsquared_seed: fewer points than k");

  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  std::vector<bool> taken(n, false);
  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());

  const std::size_t first = rng.uniform_index(n);
  chosen.push_back(first);
  taken[first] = true;

  for (std::size_t round = 1; round < k; ++round) {
    const auto last = points[chosen.back()];
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double d2 = squared_dist(points[i], last);
      if (d2 < min_d2[i]) min_d2[i] = d2;
      total += min_d2[i];
    }

    std::size_t pick = n;
    if (total > 0.0) {
      const double u = rng.uniform01() * total;
      double cum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        cum += min_d2[i];
        if (cum > u) {
          pick = i;
          break;
        }
      }
    }
    if (pick == n) {
      // zero (or fully consumed) mass: uniform over the remaining points
      std::size_t skip = rng.uniform_index(n - chosen.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        if (skip == 0) {
          pick = i;
          break;
        }
        --skip;
      }
    }
    chosen.push_back(pick);
    taken[pick] = true;
  }
  return chosen;
}

PointSet dsquared_seed(const PointSet& points, std::size_t k, Rng& rng) {
  return points.subset(dsquared_seed_indices(points, k, rng));
}

PointSet lloyd_refine(const PointSet& points, const PointSet& centers,
                      std::size_t iters) {
  if (centers.empty())
    throw std::invalid_argument("lloyd_refine: empty center set");
  PointSet current = centers;
  const std::size_t d = points.dim();
  for (std::size_t it = 0; it < iters; ++it) {
    const Assignment a = assign(points, current);
    PointSet next(centers.dim());
    next.reserve(current.size());
    std::vector<double> centroid(d);
    for (std::size_t c = 0; c < current.size(); ++c) {
      const auto& members = a.clusters[c];
      if (members.empty()) {
        next.push_back(current[c]);
        continue;
      }
      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t i : members) {
        const auto p = points[i];
        for (std::size_t j = 0; j < d; ++j) centroid[j] += p[j];
      }
      for (double& v : centroid) v /= static_cast<double>(members.size());
      next.push_back(centroid);
    }
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::size_t kmeanspp_rounds(double delta) {
  if (!(delta > 0.0) || delta > 0.1)
    throw std::invalid_argument("kmeanspp_rounds: delta must be in (0, 1/10]");
  return static_cast<std::size_t>(std::ceil(std::log2(2.0 / delta)));
}

namespace {

double total_nearest_distance(const PointSet& points, const PointSet& centers) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c)
      best = std::min(best, squared_dist(points[i], centers[c]));
    total += std::sqrt(best);
  }
  return total;
}

}  // namespace

PointSet best_of_kmeanspp_rounds(const PointSet& points, std::size_t k,
                                 std::size_t rounds, Rng& rng) {
  if (rounds == 0)
    throw std::invalid_argument("best_of_kmeanspp: need at least one round");
  PointSet best;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rounds; ++i) {
    Rng round_rng = rng.derive("round:" + std::to_string(i));
    PointSet candidate = dsquared_seed(points, k, round_rng);
    const double score = total_nearest_distance(points, candidate);
    if (score < best_score) {
      best_score = score;
      best = std::move(candidate);
    }
  }
  return best;
}

PointSet best_of_kmeanspp(const PointSet& points, std::size_t k, double delta,
                          Rng& rng, bool practical_single_round) {
  std::size_t rounds = kmeanspp_rounds(delta);  // also validates delta
  if (practical_single_round) rounds = 1;
  return best_of_kmeanspp_rounds(points, k, rounds, rng);
}

}  // namespace imbcluster

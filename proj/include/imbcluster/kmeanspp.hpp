#pragma once

#include <cstddef>
#include <vector>

#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

// D^2-sampling seeding: the first center is uniform over the data, each
// further center is drawn among the remaining points with probability
// proportional to its squared distance to the nearest chosen center. Chosen
// points never repeat; an all-zero distance mass falls back to a uniform
// draw over the remaining points.
std::vector<std::size_t> dsquared_seed_indices(const PointSet& points,
                                               std::size_t k, Rng& rng);
PointSet dsquared_seed(const PointSet& points, std::size_t k, Rng& rng);

// Alternating assignment / per-cluster centroid passes, at most iters times,
// stopping early at a fixed point. Empty clusters keep their center.
PointSet lloyd_refine(const PointSet& points, const PointSet& centers,
                      std::size_t iters);

// ceil(log2(2/delta)) seeding rounds; delta must lie in (0, 1/10].
std::size_t kmeanspp_rounds(double delta);

// Best seeding over the given number of rounds by total nearest-center
// distance; ties keep the earliest round. Round i draws from the derived
// stream "round:i".
PointSet best_of_kmeanspp_rounds(const PointSet& points, std::size_t k,
                                 std::size_t rounds, Rng& rng);

// Round count from delta, or a single round in practical mode.
PointSet best_of_kmeanspp(const PointSet& points, std::size_t k, double delta,
                          Rng& rng, bool practical_single_round = false);

}  // namespace imbcluster

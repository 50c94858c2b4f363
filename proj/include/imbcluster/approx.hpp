#pragma once

#include <cstddef>
#include <vector>

#include "imbcluster/loss.hpp"
#include "imbcluster/points.hpp"

namespace imbcluster {

struct ApproxOptions {
  Objective objective = Objective::Relaxed;
  SizeSource size_source = SizeSource::WeightMass;
  // Enumeration guard: abort when C(n,k)*n*d*k exceeds this many distance
  // evaluations. Large inputs should go through a coreset first.
  double max_cost = 1e9;
};

struct ApproxResult {
  PointSet centers;
  std::vector<std::size_t> indices;  // positions of the centers in the input
  double loss = 0.0;
};

// Exact minimization of the (weighted) loss over all k-point subsets of the
// data. Subsets are scanned in lexicographic index order and ties keep the
// first minimizer, i.e. the lexicographically smallest index tuple.
//
// Candidate tuples containing coinciding points are skipped (they are not
// size-k subsets; they degrade to k-1 centers), as are candidates in which
// some cluster's weighted distance sum is negative (true cluster sums are
// nonnegative; a negative one is sign noise from telescoped coreset
// weights). When no candidate qualifies, the plain minimizer is returned.
ApproxResult exhaustive_approx(const WeightedSet& data, std::size_t k,
                               const ApproxOptions& options = {});
ApproxResult exhaustive_approx(const PointSet& points, std::size_t k,
                               const ApproxOptions& options = {});

// C(n,k)*n*d*k, saturating; the enumeration guard's cost model.
double enumeration_cost(std::size_t n, std::size_t k, std::size_t dim);

}  // namespace imbcluster

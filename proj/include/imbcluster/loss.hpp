#pragma once

#include <span>

#include "imbcluster/points.hpp"

namespace imbcluster {

// How the per-cluster size N_c is measured when evaluating a weighted set:
// member count, or total member weight clamped below at 1.
enum class SizeSource { Cardinality, WeightMass };

// Fitting divides each cluster's distance sum by N_c + 1; Relaxed divides by
// log2(N_c + 1) squared.
enum class Objective { Fitting, Relaxed };

// sum_c 1/(|P_c|+1) * sum_{p in P_c} ||p - c||. Empty clusters contribute 0.
double fitting_loss(const PointSet& points, const PointSet& centers);

// sum_c 1/log2^2(|P_c|+1) * sum_{p in P_c} ||p - c||.
double relaxed_loss(const PointSet& points, const PointSet& centers);

// Weighted evaluation: the inner sums carry per-point weights. May be
// negative when weights are.
double weighted_relaxed_loss(const WeightedSet& data, const PointSet& centers,
                             SizeSource size_source = SizeSource::WeightMass);
double weighted_fitting_loss(const WeightedSet& data, const PointSet& centers,
                             SizeSource size_source = SizeSource::WeightMass);
double weighted_loss(const WeightedSet& data, const PointSet& centers,
                     Objective objective,
                     SizeSource size_source = SizeSource::WeightMass);

// Sum over nonempty clusters of the mean squared distance to the cluster
// centroid (population variance). Singletons contribute 0.
double variance_loss(const PointSet& points, const Assignment& assignment);
double variance_loss(const PointSet& points, std::span<const int> labels);

}  // namespace imbcluster

#pragma once

#include <optional>
#include <span>

#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

// Mean silhouette over every point. Per point: a = mean distance to its own
// cluster excluding itself, b = smallest mean distance to another cluster,
// score (b-a)/max(a,b); members of singleton clusters score 0. Requires at
// least two distinct labels.
double silhouette_full(const PointSet& points, std::span<const int> labels);

// Silhouette of a uniform sample without replacement (scores computed within
// the sample, like the scikit-learn sampled variant). sample_size >= n or
// nullopt scores the full set; a sample that collapses to a single label
// falls back to the full set.
double silhouette(const PointSet& points, std::span<const int> labels,
                  std::optional<std::size_t> sample_size, Rng& rng);

// Harmonic mean of homogeneity and completeness from the label contingency
// table. Natural-log entropies; the score is base-invariant. A term whose
// conditioning entropy is zero counts as 1, so two single-class labelings
// score 1.
double v_measure(std::span<const int> true_labels,
                 std::span<const int> pred_labels);

}  // namespace imbcluster

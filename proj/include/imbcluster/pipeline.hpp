#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imbcluster/approx.hpp"
#include "imbcluster/bicriteria.hpp"
#include "imbcluster/coreset.hpp"
#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

// Approx((C,w),k): builds a coreset of the data and enumerates exactly over
// its points, weighted, WeightMass cluster sizes. Returns k centers.
PointSet approx_on_coreset(const PointSet& points, std::size_t k,
                           const CoresetParams& params, Rng& rng,
                           Objective objective = Objective::Relaxed);

struct Candidate {
  std::string name;
  std::function<PointSet(const PointSet&, std::size_t, Rng&)> run;
};

// The paper's pair: approx-on-coreset first, then the k-means++/Lloyd
// baseline.
std::vector<Candidate> default_choice_candidates(
    const CoresetParams& params, Objective objective = Objective::Relaxed,
    std::size_t lloyd_iters = 10);

struct ChoiceResult {
  std::vector<int> labels;
  PointSet centers;
  std::string chosen;
  double score = 0.0;  // silhouette of the winner
};

// Runs every candidate, scores each clustering with the sampled silhouette
// (falling back to the full set when the sample collapses), and keeps the
// best score; ties keep the earlier candidate. Candidates whose clustering
// cannot be scored at all are skipped; if none survive, throws.
ChoiceResult choice_cluster(const PointSet& points, std::size_t k,
                            const std::vector<Candidate>& candidates,
                            std::optional<std::size_t> sample_size, Rng& rng);

enum class Splitter { ApproxOnCoreset, KMeansPP, BiCriteria, Choice };

Splitter splitter_from_name(std::string_view name);
std::string_view splitter_name(Splitter splitter);

struct DivisiveParams {
  Splitter splitter = Splitter::ApproxOnCoreset;
  CoresetParams coreset;
  Objective objective = Objective::Relaxed;
  double delta = 0.1;
  std::size_t lloyd_iters = 10;
  std::optional<std::size_t> choice_sample_size = 1024;
};

// k centers for one flat clustering step, per splitter. BiCriteria output is
// reduced to its best k-subset under the fitting loss of the data.
PointSet split_centers(const PointSet& points, std::size_t k,
                       const DivisiveParams& params, Rng& rng);

struct TreeNode {
  std::string path;  // "" for the root, then one '0'/'1' per level
  std::size_t depth = 0;
  PointSet centers;  // the two split centers; empty on leaves
  std::vector<std::size_t> members;
  int child[2] = {-1, -1};
  int leaf_label = -1;
  bool is_leaf() const { return child[0] < 0; }
};

struct ClusterTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::size_t point_count = 0;
  std::size_t max_depth = 0;

  std::size_t leaf_count() const;
  std::vector<int> labels() const;  // per point, by leaf
};

// Recursive binary splitting to the given depth. Nodes with fewer than two
// points, at max depth, or whose split starves a side become leaves.
ClusterTree divisive_tree(const PointSet& points, std::size_t depth,
                          const DivisiveParams& params, Rng& rng);

std::string tree_to_json(const ClusterTree& tree);

}  // namespace imbcluster

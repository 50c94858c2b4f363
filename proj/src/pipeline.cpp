#include "imbcluster/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "imbcluster/kmeanspp.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/metrics.hpp"

namespace imbcluster {

PointSet approx_on_coreset(const PointSet& points, std::size_t k,
                           const CoresetParams& params, Rng& rng,
                           Objective objective) {
  if (points.size() < k)
    throw std::invalid_argument("approx_on_coreset: fewer points than k");
  CoresetParams p = params;
  p.k = k;
  const Coreset coreset = build_coreset(points, p, rng);
  ApproxOptions opt;
  opt.objective = objective;
  opt.size_source = SizeSource::WeightMass;
  // the coreset's own size already bounds this enumeration; the cost guard
  // stays on direct exhaustive_approx use
  opt.max_cost = std::numeric_limits<double>::infinity();
  return exhaustive_approx(coreset.data, k, opt).centers;
}

std::vector<Candidate> default_choice_candidates(const CoresetParams& params,
                                                 Objective objective,
                                                 std::size_t lloyd_iters) {
  std::vector<Candidate> out;
  out.push_back({"approx-on-coreset",
                 [params, objective](const PointSet& p, std::size_t k, Rng& r) {
                   return approx_on_coreset(p, k, params, r, objective);
                 }});
  out.push_back({"kmeanspp",
                 [params, lloyd_iters](const PointSet& p, std::size_t k, Rng& r) {
                   const PointSet seeds =
                       best_of_kmeanspp(p, k, params.delta, r, true);
                   return lloyd_refine(p, seeds, lloyd_iters);
                 }});
  return out;
}

ChoiceResult choice_cluster(const PointSet& points, std::size_t k,
                            const std::vector<Candidate>& candidates,
                            std::optional<std::size_t> sample_size, Rng& rng) {
  if (candidates.size() < 2)
    throw std::invalid_argument("choice_cluster: need at least 2 candidates");
  if (points.size() < k)
    throw std::invalid_argument("choice_cluster: fewer points than k");

  ChoiceResult best;
  best.score = -std::numeric_limits<double>::infinity();
  bool any = false;
  std::string first_error;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      Rng cand_rng = rng.derive("candidate:" + std::to_string(i));
      PointSet centers = candidates[i].run(points, k, cand_rng);
      const Assignment a = assign(points, centers);
      Rng score_rng = rng.derive("silhouette:" + std::to_string(i));
      const double score = silhouette(points, a.labels, sample_size, score_rng);
      if (score > best.score) {
        best.labels = a.labels;
        best.centers = std::move(centers);
        best.chosen = candidates[i].name;
        best.score = score;
      }
      any = true;
    } catch (const std::exception& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (!any)
    throw std::runtime_error("choice_cluster: every candidate failed: " +
                             first_error);
  return best;
}

Splitter splitter_from_name(std::string_view name) {
  if (name == "approx-on-coreset") return Splitter::ApproxOnCoreset;
  if (name == "kmeanspp") return Splitter::KMeansPP;
  if (name == "bicriteria") return Splitter::BiCriteria;
  if (name == "choice") return Splitter::Choice;
  throw std::invalid_argument("unknown splitter '" + std::string(name) + "'");
}

std::string_view splitter_name(Splitter splitter) {
  switch (splitter) {
    case Splitter::ApproxOnCoreset: return "approx-on-coreset";
    case Splitter::KMeansPP: return "kmeanspp";
    case Splitter::BiCriteria: return "bicriteria";
    case Splitter::Choice: return "choice";
  }
  return "?";
}

namespace {

// Best k-subset of the candidate centers under the data's fitting loss;
// ties keep the lexicographically first tuple.
PointSet reduce_centers(const PointSet& points, const PointSet& candidates,
                        std::size_t k) {
  if (candidates.size() <= k) return candidates;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  const std::size_t m = candidates.size();
  PointSet best;
  double best_loss = std::numeric_limits<double>::infinity();
  for (;;) {
    const PointSet trial = candidates.subset(comb);
    const double loss = fitting_loss(points, trial);
    if (loss < best_loss) {
      best_loss = loss;
      best = trial;
    }
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return best;
}

}  // namespace

PointSet split_centers(const PointSet& points, std::size_t k,
                       const DivisiveParams& params, Rng& rng) {
  switch (params.splitter) {
    case Splitter::ApproxOnCoreset:
      return approx_on_coreset(points, k, params.coreset, rng,
                               params.objective);
    case Splitter::KMeansPP: {
      const PointSet seeds = best_of_kmeanspp(points, k, params.delta, rng, true);
      return lloyd_refine(points, seeds, params.lloyd_iters);
    }
    case Splitter::BiCriteria: {
      BiCriteriaParams bp;
      bp.k = k;
      bp.delta = params.delta;
      const PointSet b = bicriteria(points, bp, rng);
      return reduce_centers(points, b, k);
    }
    case Splitter::Choice:
      return choice_cluster(points, k,
                            default_choice_candidates(params.coreset,
                                                      params.objective,
                                                      params.lloyd_iters),
                            params.choice_sample_size, rng)
          .centers;
  }
  throw std::logic_error("split_centers: bad splitter");
}

std::size_t ClusterTree::leaf_count() const {
  std::size_t count = 0;
  for (const auto& node : nodes) count += node.is_leaf() ? 1 : 0;
  return count;
}

std::vector<int> ClusterTree::labels() const {
  std::vector<int> out(point_count, -1);
  for (const auto& node : nodes) {
    if (!node.is_leaf()) continue;
    for (std::size_t i : node.members) out[i] = node.leaf_label;
  }
  return out;
}

namespace {

void split_node(ClusterTree& tree, int node_id, const PointSet& points,
                const DivisiveParams& params, const Rng& rng) {
  TreeNode& node = tree.nodes[node_id];
  if (node.depth >= tree.max_depth || node.members.size() < 2) return;

  const PointSet sub = points.subset(node.members);
  bool all_equal = true;
  for (std::size_t i = 1; i < sub.size() && all_equal; ++i) {
    const auto a = sub[0];
    const auto b = sub[i];
    all_equal = std::equal(a.begin(), a.end(), b.begin());
  }
  if (all_equal) return;  // indistinguishable points: nothing to split
  Rng node_rng = rng.derive("split:" + node.path);
  PointSet centers = split_centers(sub, 2, params, node_rng);

  const Assignment a = assign(sub, centers);
  std::vector<std::size_t> left, right;
  for (std::size_t i = 0; i < sub.size(); ++i)
    (a.labels[i] == 0 ? left : right).push_back(node.members[i]);
  if (left.empty() || right.empty()) return;  // starved split: stay a leaf

  tree.nodes[node_id].centers = std::move(centers);
  const std::size_t depth = tree.nodes[node_id].depth;
  const std::string path = tree.nodes[node_id].path;

  const int left_id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({path + "0", depth + 1, PointSet{}, std::move(left)});
  tree.nodes[node_id].child[0] = left_id;
  split_node(tree, left_id, points, params, rng);

  const int right_id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({path + "1", depth + 1, PointSet{}, std::move(right)});
  tree.nodes[node_id].child[1] = right_id;
  split_node(tree, right_id, points, params, rng);
}

}  // namespace

ClusterTree divisive_tree(const PointSet& points, std::size_t depth,
                          const DivisiveParams& params, Rng& rng) {
  ClusterTree tree;
  tree.point_count = points.size();
  tree.max_depth = depth;

  TreeNode root;
  root.path = "";
  root.depth = 0;
  root.members.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) root.members[i] = i;
  tree.nodes.push_back(std::move(root));

  if (!points.empty()) split_node(tree, 0, points, params, rng);

  int next_label = 0;
  for (auto& node : tree.nodes)
    if (node.is_leaf()) node.leaf_label = next_label++;
  return tree;
}

std::string tree_to_json(const ClusterTree& tree) {
  nlohmann::json j;
  j["point_count"] = tree.point_count;
  j["max_depth"] = tree.max_depth;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : tree.nodes) {
    nlohmann::json nj;
    nj["path"] = node.path;
    nj["depth"] = node.depth;
    nj["member_count"] = node.members.size();
    nj["leaf"] = node.is_leaf();
    if (node.is_leaf()) nj["label"] = node.leaf_label;
    nlohmann::json centers = nlohmann::json::array();
    for (std::size_t i = 0; i < node.centers.size(); ++i) {
      const auto row = node.centers[i];
      centers.push_back(std::vector<double>(row.begin(), row.end()));
    }
    nj["centers"] = std::move(centers);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(2);
}

}  // namespace imbcluster

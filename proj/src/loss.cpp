#include "imbcluster/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace imbcluster {

namespace {

double size_divisor(Objective objective, double n_c) {
  if (objective == Objective::Fitting) return n_c + 1.0;
  const double l = std::log2(n_c + 1.0);
  return l * l;
}

// Shared kernel. Clusters are visited in center order and members in index
// order so that unit-weight evaluation is bit-identical to the unweighted
// losses.
double partition_loss(const PointSet& points, const PointSet& centers,
                      const double* weights, Objective objective,
                      SizeSource size_source) {
  const Assignment a =
      weights ? assign(points, centers,
                       std::span<const double>(weights, points.size()))
              : assign(points, centers);
  double total = 0.0;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const auto& members = a.clusters[c];
    if (members.empty()) continue;
    double sum = 0.0;
    for (std::size_t i : members) {
      const double d = euclidean_dist(points[i], centers[c]);
      sum += weights ? weights[i] * d : d;
    }
    const double n_c = size_source == SizeSource::Cardinality
                           ? static_cast<double>(members.size())
                           : std::max(a.masses[c], 1.0);
    total += sum / size_divisor(objective, n_c);
  }
  return total;
}

}  // namespace

double fitting_loss(const PointSet& points, const PointSet& centers) {
  return partition_loss(points, centers, nullptr, Objective::Fitting,
                        SizeSource::Cardinality);
}

double relaxed_loss(const PointSet& points, const PointSet& centers) {
  return partition_loss(points, centers, nullptr, Objective::Relaxed,
                        SizeSource::Cardinality);
}

double weighted_loss(const WeightedSet& data, const PointSet& centers,
                     Objective objective, SizeSource size_source) {
  if (data.weights.size() != data.points.size())
    throw std::invalid_argument("weighted_loss: weight count mismatch");
  return partition_loss(data.points, centers, data.weights.data(), objective,
                        size_source);
}

double weighted_relaxed_loss(const WeightedSet& data, const PointSet& centers,
                             SizeSource size_source) {
  return weighted_loss(data, centers, Objective::Relaxed, size_source);
}

double weighted_fitting_loss(const WeightedSet& data, const PointSet& centers,
                             SizeSource size_source) {
  return weighted_loss(data, centers, Objective::Fitting, size_source);
}

double variance_loss(const PointSet& points, const Assignment& assignment) {
  const std::size_t d = points.dim();
  bool any = false;
  double total = 0.0;
  for (const auto& members : assignment.clusters) {
    if (members.empty()) continue;
    any = true;
    std::vector<double> centroid(d, 0.0);
    for (std::size_t i : members) {
      const auto p = points[i];
      for (std::size_t c = 0; c < d; ++c) centroid[c] += p[c];
    }
    for (double& v : centroid) v /= static_cast<double>(members.size());
    double sq = 0.0;
    for (std::size_t i : members) sq += squared_dist(points[i], centroid);
    total += sq / static_cast<double>(members.size());
  }
  if (!any)
    throw std::invalid_argument("variance_loss: no nonempty cluster");
  return total;
}

double variance_loss(const PointSet& points, std::span<const int> labels) {
  if (labels.size() != points.size())
    throw std::invalid_argument("variance_loss: label count mismatch");
  int max_label = -1;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("variance_loss: negative label");
    max_label = std::max(max_label, l);
  }
  Assignment a;
  a.labels.assign(labels.begin(), labels.end());
  a.clusters.assign(static_cast<std::size_t>(max_label) + 1, {});
  for (std::size_t i = 0; i < labels.size(); ++i)
    a.clusters[static_cast<std::size_t>(labels[i])].push_back(i);
  return variance_loss(points, a);
}

}  // namespace imbcluster

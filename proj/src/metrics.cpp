#include "imbcluster/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace imbcluster {

namespace {

// Compact labels to 0..L-1 preserving first-appearance order.
std::pair<std::vector<std::size_t>, std::size_t> compact_labels(
    std::span<const int> labels) {
  std::map<int, std::size_t> ids;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
    out[i] = it->second;
  }
  return {std::move(out), ids.size()};
}

double silhouette_of(const PointSet& points,
                     const std::vector<std::size_t>& labels,
                     std::size_t n_labels) {
  const std::size_t n = points.size();
  std::vector<std::size_t> counts(n_labels, 0);
  for (std::size_t l : labels) ++counts[l];

  double total = 0.0;
  std::vector<double> sums(n_labels);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sums[labels[j]] += euclidean_dist(points[i], points[j]);
    }
    const std::size_t own = labels[i];
    if (counts[own] <= 1) continue;  // singleton convention: score 0
    const double a = sums[own] / static_cast<double>(counts[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n_labels; ++c) {
      if (c == own || counts[c] == 0) continue;
      b = std::min(b, sums[c] / static_cast<double>(counts[c]));
    }
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

}  // namespace

double silhouette_full(const PointSet& points, std::span<const int> labels) {
  if (labels.size() != points.size())
    throw std::invalid_argument("silhouette: label count mismatch");
  if (points.empty())
    throw std::invalid_argument("silhouette: empty point set");
  auto [compact, n_labels] = compact_labels(labels);
  if (n_labels < 2)
    throw std::invalid_argument("silhouette: need at least 2 distinct labels");
  return silhouette_of(points, compact, n_labels);
}

double silhouette(const PointSet& points, std::span<const int> labels,
                  std::optional<std::size_t> sample_size, Rng& rng) {
  const std::size_t n = points.size();
  if (!sample_size || *sample_size >= n)
    return silhouette_full(points, labels);
  if (labels.size() != n)
    throw std::invalid_argument("silhouette: label count mismatch");
  {
    auto [compact, n_labels] = compact_labels(labels);
    if (n_labels < 2)
      throw std::invalid_argument(
          "silhouette: need at least 2 distinct labels");
  }

  // partial Fisher-Yates draw without replacement
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  const std::size_t m = *sample_size;
  for (std::size_t i = 0; i < m; ++i)
    std::swap(order[i], order[i + rng.uniform_index(n - i)]);
  order.resize(m);

  PointSet sub = points.subset(order);
  std::vector<int> sub_labels(m);
  for (std::size_t i = 0; i < m; ++i) sub_labels[i] = labels[order[i]];

  auto [compact, n_labels] = compact_labels(sub_labels);
  if (n_labels < 2) return silhouette_full(points, labels);
  return silhouette_of(sub, compact, n_labels);
}

double v_measure(std::span<const int> true_labels,
                 std::span<const int> pred_labels) {
  if (true_labels.size() != pred_labels.size())
    throw std::invalid_argument("v_measure: length mismatch");
  const std::size_t n = true_labels.size();
  if (n == 0) throw std::invalid_argument("v_measure: empty labelings");

  auto [t, nt] = compact_labels(true_labels);
  auto [p, np] = compact_labels(pred_labels);

  std::vector<double> joint(nt * np, 0.0);
  std::vector<double> t_count(nt, 0.0), p_count(np, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    joint[t[i] * np + p[i]] += 1.0;
    t_count[t[i]] += 1.0;
    p_count[p[i]] += 1.0;
  }

  const double dn = static_cast<double>(n);
  auto entropy = [&](const std::vector<double>& counts) {
    double h = 0.0;
    for (double c : counts)
      if (c > 0.0) h -= (c / dn) * std::log(c / dn);
    return h;
  };
  const double h_t = entropy(t_count);
  const double h_p = entropy(p_count);

  double h_t_given_p = 0.0;  // H(true | pred)
  double h_p_given_t = 0.0;  // H(pred | true)
  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = 0; b < np; ++b) {
      const double c = joint[a * np + b];
      if (c <= 0.0) continue;
      h_t_given_p -= (c / dn) * std::log(c / p_count[b]);
      h_p_given_t -= (c / dn) * std::log(c / t_count[a]);
    }
  }

  const double homogeneity = h_t == 0.0 ? 1.0 : 1.0 - h_t_given_p / h_t;
  const double completeness = h_p == 0.0 ? 1.0 : 1.0 - h_p_given_t / h_p;
  if (homogeneity + completeness == 0.0) return 0.0;
  return 2.0 * homogeneity * completeness / (homogeneity + completeness);
}

}  // namespace imbcluster

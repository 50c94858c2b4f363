#include "imbcluster/points.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace imbcluster {

namespace {

void check_finite(std::span<const double> p) {
  for (double v : p) {
    if (!std::isfinite(v))
      throw std::invalid_argument("PointSet: non-finite coordinate");
  }
}

}  // namespace

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
}

PointSet::PointSet(std::size_t n, std::size_t dim, std::vector<double> rowmajor)
    : dim_(dim), data_(std::move(rowmajor)) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
  if (data_.size() != n * dim)
    throw std::invalid_argument("PointSet: row-major buffer size mismatch");
  check_finite(data_);
}

PointSet::PointSet(std::initializer_list<Point> rows) {
  for (const Point& p : rows) push_back(p);
}

Point PointSet::row(std::size_t i) const {
  const auto s = (*this)[i];
  return Point(s.begin(), s.end());
}

void PointSet::reserve(std::size_t n) { data_.reserve(n * dim_); }

void PointSet::push_back(std::span<const double> p) {
  if (p.empty()) throw std::invalid_argument("PointSet: empty point");
  if (dim_ == 0)
    dim_ = p.size();
  else if (p.size() != dim_)
    throw std::invalid_argument("PointSet: dimension mismatch");
  check_finite(p);
  data_.insert(data_.end(), p.begin(), p.end());
}

void PointSet::append(const PointSet& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out(dim_ == 0 ? 1 : dim_);
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back((*this)[i]);
  return out;
}

WeightedSet WeightedSet::unit(PointSet p) {
  std::vector<double> w(p.size(), 1.0);
  return WeightedSet{std::move(p), std::move(w)};
}

double euclidean_dist(std::span<const double> p, std::span<const double> q) {
  return std::sqrt(squared_dist(p, q));
}

double squared_dist(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("euclidean_dist: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = p[i] - q[i];
    acc += diff * diff;
  }
  return acc;
}

namespace {

Assignment assign_impl(const PointSet& points, const PointSet& centers,
                       const double* weights) {
  if (centers.empty()) throw std::invalid_argument("assign: empty center set");
  if (!points.empty() && points.dim() != centers.dim())
    throw std::invalid_argument("assign: dimension mismatch");

  const std::size_t n = points.size();
  const std::size_t m = centers.size();
  Assignment out;
  out.labels.resize(n);
  out.clusters.assign(m, {});
  out.sizes.assign(m, 0);
  out.masses.assign(m, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < m; ++c) {
      const double d2 = squared_dist(points[i], centers[c]);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = c;
      }
    }
    out.labels[i] = static_cast<int>(best);
    out.clusters[best].push_back(i);
    out.sizes[best] += 1;
    out.masses[best] += weights ? weights[i] : 1.0;
  }
  return out;
}

}  // namespace

Assignment assign(const PointSet& points, const PointSet& centers) {
  return assign_impl(points, centers, nullptr);
}

Assignment assign(const WeightedSet& data, const PointSet& centers) {
  if (data.weights.size() != data.points.size())
    throw std::invalid_argument("assign: weight count mismatch");
  return assign_impl(data.points, centers, data.weights.data());
}

Assignment assign(const PointSet& points, const PointSet& centers,
                  std::span<const double> weights) {
  if (weights.size() != points.size())
    throw std::invalid_argument("assign: weight count mismatch");
  return assign_impl(points, centers, weights.data());
}

}  // namespace imbcluster

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace imbcluster {

using Point = std::vector<double>;

// Dense d-dimensional points in row-major storage. Insertion order is
// identity: every operation reports per-point results in this order.
// Coordinates must be finite; the dimension is uniform across rows.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t n, std::size_t dim, std::vector<double> rowmajor);
  PointSet(std::initializer_list<Point> rows);

  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  Point row(std::size_t i) const;

  void reserve(std::size_t n);
  void push_back(std::span<const double> p);
  void append(const PointSet& other);
  PointSet subset(std::span<const std::size_t> indices) const;

  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Points plus one real weight per point. Weights may be negative (coreset
// center weights go negative by construction).
struct WeightedSet {
  PointSet points;
  std::vector<double> weights;

  static WeightedSet unit(PointSet p);
  std::size_t size() const { return points.size(); }
};

// Nearest-center partition. labels[i] is the index of the center closest to
// point i; ties go to the lowest center index. Empty clusters are allowed.
struct Assignment {
  std::vector<int> labels;
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> sizes;   // sizes[c] == clusters[c].size()
  std::vector<double> masses;       // total weight per cluster
};

double euclidean_dist(std::span<const double> p, std::span<const double> q);
double squared_dist(std::span<const double> p, std::span<const double> q);

Assignment assign(const PointSet& points, const PointSet& centers);
Assignment assign(const WeightedSet& data, const PointSet& centers);
Assignment assign(const PointSet& points, const PointSet& centers,
                  std::span<const double> weights);

}  // namespace imbcluster

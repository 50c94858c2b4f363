#include "imbcluster/bicriteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "imbcluster/approx.hpp"

namespace imbcluster {

std::size_t bicriteria_lambda(const BiCriteriaParams& params, std::size_t n) {
  if (params.lambda_override) {
    if (*params.lambda_override == 0)
      throw std::invalid_argument("bicriteria: lambda override must be >= 1");
    return *params.lambda_override;
  }
  if (params.mode == AlgoMode::Practical) return 64;
  const double k = static_cast<double>(params.k);
  const double v = params.c_const * k * k *
                   std::log2(static_cast<double>(n) / params.delta);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(v)));
}

namespace {

struct DistIdx {
  double d2;
  std::size_t idx;
};

bool dist_less(const DistIdx& a, const DistIdx& b) {
  if (a.d2 != b.d2) return a.d2 < b.d2;
  return a.idx < b.idx;
}

std::vector<std::size_t> select_closest(std::vector<DistIdx>& pool,
                                        std::size_t count) {
  count = std::min(count, pool.size());
  std::vector<std::size_t> out;
  out.reserve(count);
  if (count == 0) return out;
  if (count < pool.size())
    std::nth_element(pool.begin(), pool.begin() + count - 1, pool.end(),
                     dist_less);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[i].idx);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> closest_n(const PointSet& points,
                                   std::span<const double> q,
                                   std::size_t count) {
  std::vector<DistIdx> pool(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    pool[i] = {squared_dist(points[i], q), i};
  return select_closest(pool, count);
}

std::vector<std::size_t> closest(const PointSet& points,
                                 std::span<const double> q, double gamma) {
  if (points.empty()) throw std::invalid_argument("closest: empty point set");
  if (!(gamma >= 0.0) || gamma > 1.0)
    throw std::invalid_argument("closest: gamma must be in [0, 1]");
  const auto count = static_cast<std::size_t>(
      std::ceil(gamma * static_cast<double>(points.size())));
  return closest_n(points, q, count);
}

RobustMedian robust_median_of_sample(const PointSet& sample, std::size_t k,
                                     std::optional<std::size_t> closest_override) {
  const std::size_t n = sample.size();
  if (n == 0)
    throw std::invalid_argument("robust_median_of_sample: empty sample");
  if (k == 0)
    throw std::invalid_argument("robust_median_of_sample: k must be >= 1");
  const std::size_t m =
      closest_override ? *closest_override
                       : std::max<std::size_t>(1, 15 * n / (16 * k));

  RobustMedian best{0, std::numeric_limits<double>::infinity()};
  std::vector<DistIdx> pool(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i)
      pool[i] = {squared_dist(sample[i], sample[p]), i};
    const std::size_t count = std::min(m, n);
    if (count < n)
      std::nth_element(pool.begin(), pool.begin() + count - 1, pool.end(),
                       dist_less);
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += std::sqrt(pool[i].d2);
    const double loss = sum / static_cast<double>(count + 1);
    if (loss < best.loss) best = {p, loss};
  }
  return best;
}

PointSet bicriteria(const PointSet& points, const BiCriteriaParams& params,
                    Rng& rng, BiCriteriaStats* stats) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("bicriteria: need at least 2 points");
  if (params.k == 0) throw std::invalid_argument("bicriteria: k must be >= 1");
  if (!(params.delta > 0.0) || params.delta > 0.1)
    throw std::invalid_argument("bicriteria: delta must be in (0, 1/10]");

  const std::size_t lambda = bicriteria_lambda(params, n);
  if (stats) {
    stats->lambda = lambda;
    stats->alive_sizes.clear();
  }

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;

  Rng sampler = rng.derive("sample");
  PointSet centers(points.dim());

  while (alive.size() >= 2 * lambda) {
    if (stats) stats->alive_sizes.push_back(alive.size());

    PointSet sample(points.dim());
    sample.reserve(lambda);
    for (std::size_t i = 0; i < lambda; ++i)
      sample.push_back(points[alive[sampler.uniform_index(alive.size())]]);

    const RobustMedian median = robust_median_of_sample(sample, params.k);
    const Point center = sample.row(median.index);

    const std::size_t removal =
        std::max<std::size_t>(1, 3 * alive.size() / (4 * params.k));
    std::vector<DistIdx> pool(alive.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
      pool[i] = {squared_dist(points[alive[i]], center), alive[i]};
    const std::vector<std::size_t> victims = select_closest(pool, removal);

    std::vector<std::size_t> next;
    next.reserve(alive.size() - victims.size());
    std::size_t v = 0;
    for (std::size_t idx : alive) {  // victims is sorted; alive is sorted
      if (v < victims.size() && victims[v] == idx) {
        ++v;
        continue;
      }
      next.push_back(idx);
    }
    alive = std::move(next);
    centers.push_back(center);
  }
  if (stats) stats->alive_sizes.push_back(alive.size());

  if (params.mode == AlgoMode::Theoretical || alive.size() < params.k) {
    for (std::size_t idx : alive) centers.push_back(points[idx]);
  } else {
    ApproxOptions opt;
    opt.max_cost = params.approx_budget;
    const ApproxResult remainder =
        exhaustive_approx(points.subset(alive), params.k, opt);
    centers.append(remainder.centers);
  }
  return centers;
}

}  // namespace imbcluster

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numeric>

#include "imbcluster/coreset.hpp"
#include "imbcluster/datagen.hpp"
#include "imbcluster/loss.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace imbcluster;

namespace {

double neumaier_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

PointSet random_query(const PointSet& p, std::size_t k, Rng& rng) {
  std::vector<double> lo(p.dim(), 1e300), hi(p.dim(), -1e300);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t c = 0; c < p.dim(); ++c) {
      lo[c] = std::min(lo[c], p[i][c]);
      hi[c] = std::max(hi[c], p[i][c]);
    }
  PointSet q(p.dim());
  std::vector<double> row(p.dim());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < p.dim(); ++c)
      row[c] = lo[c] + rng.uniform01() * (hi[c] - lo[c]);
    q.push_back(row);
  }
  return q;
}

}  // namespace

TEST_SUITE("coreset") {

TEST_CASE("sensitivities fixture") {
  const PointSet p = testutil::points1d({0, 1, 3});
  const PointSet b = testutil::points1d({1});
  const Sensitivities s = sensitivities(p, b);
  CHECK(s.cluster_sizes == std::vector<std::size_t>{3});
  CHECK(s.s[0] == doctest::Approx(1.0 / 3.0));
  CHECK(s.s[1] == 0.0);
  CHECK(s.s[2] == doctest::Approx(2.0 / 3.0));
  const double total = std::accumulate(s.s.begin(), s.s.end(), 0.0);
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("sensitivities match the naive recomputation") {
  Rng rng(21);
  const PointSet p = testutil::random_points(80, 3, rng, 2.0);
  const PointSet b = testutil::random_points(4, 3, rng.derive("b"), 2.0);
  const Sensitivities s = sensitivities(p, b);
  const std::vector<double> ref = oracles::naive_sensitivities(p, b);
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(s.s[i] == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("equidistant ring gives uniform sensitivity off-center") {
  // 4 points on a unit circle around the single center
  const PointSet p{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {0.0, 0.0}};
  const PointSet b{{0.0, 0.0}};
  const Sensitivities s = sensitivities(p, b);
  for (int i = 0; i < 4; ++i) CHECK(s.s[i] == doctest::Approx(0.25));
  CHECK(s.s[4] == 0.0);  // the point at the center is never sampled
}

TEST_CASE("zero total loss is the caller's short-circuit") {
  const PointSet p = testutil::points1d({5, 5});
  CHECK_THROWS_AS((void)sensitivities(p, testutil::points1d({5})),
                  std::invalid_argument);
}

TEST_CASE("early return hands back unit weights") {
  Rng data_rng(31);
  const PointSet p = testutil::random_points(100, 2, data_rng);  // n <= 128
  Rng rng(1);
  const Coreset c = build_coreset(p, CoresetParams{}, rng);
  CHECK(c.center_count == 0);
  CHECK(c.data.points == p);
  for (double w : c.data.weights) CHECK(w == 1.0);

  // bitwise agreement with the plain relaxed loss on random queries
  Rng qrng(2);
  for (int q = 0; q < 20; ++q) {
    const PointSet query = random_query(p, 2, qrng);
    CHECK(weighted_relaxed_loss(c.data, query) == relaxed_loss(p, query));
  }
}

TEST_CASE("zero-loss data returns the centers with exact masses") {
  // exactly two distinct values, every point sits on a center
  PointSet p(1);
  for (int i = 0; i < 300; ++i) {
    const double v = i % 3 == 0 ? 4.0 : -2.0;
    p.push_back({&v, 1});
  }
  Rng rng(5);
  const Coreset c = build_coreset(p, CoresetParams{}, rng);
  CHECK(c.center_count == 2);
  CHECK(c.data.size() == 2);
  const double total = neumaier_sum(c.data.weights);
  CHECK(total == doctest::Approx(300.0).epsilon(1e-12));

  Rng qrng(6);
  for (int q = 0; q < 20; ++q) {
    const PointSet query = random_query(p, 2, qrng);
    CHECK(weighted_relaxed_loss(c.data, query) ==
          doctest::Approx(relaxed_loss(p, query)).epsilon(1e-12));
  }
}

TEST_CASE("weights always sum to n and centers may go negative") {
  Rng data_rng(8);
  const LabeledSet data = make_preset("fig2", 1500, data_rng);
  Rng rng(9);
  const Coreset c = build_coreset(data.points, CoresetParams{}, rng);
  CHECK(c.data.size() == c.center_count + 128);
  const double total = neumaier_sum(c.data.weights);
  CHECK(std::abs(total - static_cast<double>(data.points.size())) <= 1e-9);

  // evaluation accepts whatever signs the telescoping produced
  Rng qrng(10);
  const PointSet query = random_query(data.points, 2, qrng);
  (void)weighted_relaxed_loss(c.data, query);
}

TEST_CASE("sample draws are unbiased at fixed centers") {
  Rng data_rng(12);
  const PointSet p = testutil::random_points(300, 2, data_rng, 2.0);
  const PointSet b = testutil::random_points(2, 2, data_rng.derive("b"), 2.0);
  const Sensitivities sens = sensitivities(p, b);
  const Assignment a = assign(p, b);

  // g(p) = distance to the owning center; zero exactly where s is zero
  std::vector<double> g(p.size());
  double g_total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    g[i] = euclidean_dist(p[i], b[a.labels[i]]);
    g_total += g[i];
  }

  const std::size_t lambda = 128;
  const std::size_t reps = 10000;
  Rng rng(77);
  double mean = 0.0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    Rng rep_rng = rng.derive("rep:" + std::to_string(rep));
    double estimate = 0.0;
    for (const auto& [idx, w] : sensitivity_sample(sens.s, lambda, rep_rng))
      estimate += w * g[idx];
    mean += estimate;
  }
  mean /= static_cast<double>(reps);
  CHECK(std::abs(mean - g_total) / g_total <= 0.02);
}

TEST_CASE("coreset round trips through csv and sidecar") {
  Rng data_rng(3);
  const PointSet p = testutil::random_points(500, 3, data_rng, 2.0);
  CoresetParams params;
  params.k = 3;
  Rng rng(4);
  const Coreset c = build_coreset(p, params, rng);

  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "imbcluster_coreset.csv";
  const auto sidecar = dir / "imbcluster_coreset.json";
  save_coreset(c, csv, sidecar);
  const Coreset back = load_coreset(csv, sidecar);
  CHECK(back.data.points == c.data.points);
  CHECK(back.data.weights == c.data.weights);
  CHECK(back.center_count == c.center_count);
  CHECK(back.lambda == c.lambda);
  CHECK(back.seed == c.seed);
  CHECK(back.params.k == params.k);
  std::filesystem::remove(csv);
  std::filesystem::remove(sidecar);
}

TEST_CASE("theoretical lambda dwarfs practical instances") {
  CoresetParams theo;
  theo.mode = AlgoMode::Theoretical;
  theo.k = 2;
  theo.epsilon = 0.5;
  const std::size_t lambda = coreset_lambda(theo, 10000, 2);
  CHECK(lambda > 10000);  // theory constants force the early return here
  Rng data_rng(1);
  const PointSet p = testutil::random_points(2000, 2, data_rng);
  Rng rng(2);
  const Coreset c = build_coreset(p, theo, rng);
  CHECK(c.center_count == 0);  // early return path
  CHECK(c.data.size() == p.size());
}

TEST_CASE("rejects bad parameters") {
  Rng rng(0);
  const PointSet p = testutil::points1d({0, 1, 2});
  CoresetParams params;
  params.delta = 0.3;
  CHECK_THROWS_AS((void)build_coreset(p, params, rng), std::invalid_argument);
  params.delta = 0.1;
  params.epsilon = 1.5;
  CHECK_THROWS_AS((void)build_coreset(p, params, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)build_coreset(testutil::points1d({1}), CoresetParams{}, rng),
                  std::invalid_argument);
}

}  // TEST_SUITE

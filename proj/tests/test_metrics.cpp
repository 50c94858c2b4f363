#include <doctest.h>

#include <cmath>

#include "imbcluster/metrics.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace imbcluster;

TEST_SUITE("metrics") {

TEST_CASE("silhouette fixture") {
  const PointSet p = testutil::points1d({0, 1, 10, 11});
  const std::vector<int> labels{0, 0, 1, 1};
  const double expected =
      (2.0 * (9.5 / 10.5) + 2.0 * (8.5 / 9.5)) / 4.0;  // 0.899749...
  CHECK(silhouette_full(p, labels) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(std::abs(silhouette_full(p, labels) - 0.899749) < 1e-6);
}

TEST_CASE("silhouette degenerate cases") {
  const PointSet p = testutil::points1d({0, 1, 2});
  CHECK_THROWS_AS((void)silhouette_full(p, std::vector<int>{1, 1, 1}),
                  std::invalid_argument);
  // all singletons score zero by convention
  CHECK(silhouette_full(p, std::vector<int>{0, 1, 2}) == 0.0);
}

TEST_CASE("sampled silhouette with a full-size sample is exact bitwise") {
  Rng data_rng(5);
  const auto data = testutil::two_discs(40, data_rng);
  const double exact = silhouette_full(data.points, data.labels);
  Rng rng(9);
  CHECK(silhouette(data.points, data.labels, 80, rng) == exact);
  CHECK(silhouette(data.points, data.labels, 500, rng) == exact);
  CHECK(silhouette(data.points, data.labels, std::nullopt, rng) == exact);
}

TEST_CASE("sampled silhouette approximates the exact value") {
  Rng data_rng(6);
  const auto data = testutil::two_discs(300, data_rng);
  const double exact = silhouette_full(data.points, data.labels);
  Rng rng(10);
  const double sampled = silhouette(data.points, data.labels, 128, rng);
  CHECK(std::abs(sampled - exact) < 0.05);
}

TEST_CASE("collapsed samples fall back to the full set") {
  // one far singleton cluster that a small sample will usually miss
  Rng data_rng(7);
  PointSet p = testutil::random_points(400, 2, data_rng);
  const double far[2] = {100.0, 100.0};
  p.push_back(far);
  std::vector<int> labels(400, 0);
  labels.push_back(1);
  const double exact = silhouette_full(p, labels);
  std::size_t fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const double v = silhouette(p, labels, 16, rng);
    if (v == exact) ++fallbacks;
  }
  CHECK(fallbacks >= 8);  // samples of 16/401 rarely include the singleton
}

TEST_CASE("silhouette matches the naive oracle and is invariant") {
  Rng rng(8);
  const PointSet p = testutil::random_points(60, 2, rng, 3.0);
  std::vector<int> labels(p.size());
  for (auto& l : labels) l = static_cast<int>(rng.uniform_index(3));
  const double ours = silhouette_full(p, labels);
  CHECK(ours == doctest::Approx(oracles::naive_silhouette(p, labels))
                    .epsilon(1e-12));

  // label renaming
  std::vector<int> renamed(labels);
  for (auto& l : renamed) l = 7 - 2 * l;
  CHECK(silhouette_full(p, renamed) == doctest::Approx(ours).epsilon(1e-12));

  // rigid motion: translate everything
  PointSet moved(2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double q[2] = {p[i][0] + 5.0, p[i][1] - 3.0};
    moved.push_back(q);
  }
  CHECK(silhouette_full(moved, labels) == doctest::Approx(ours).epsilon(1e-10));
}

TEST_CASE("v-measure fixtures") {
  const std::vector<int> truth{0, 0, 1, 1, 2, 2};
  CHECK(v_measure(truth, truth) == doctest::Approx(1.0));

  // bijective relabeling still scores 1
  const std::vector<int> relabeled{5, 5, 3, 3, 9, 9};
  CHECK(v_measure(truth, relabeled) == doctest::Approx(1.0));

  // two true classes, one predicted cluster: homogeneity 0
  CHECK(v_measure(std::vector<int>{0, 0, 1, 1},
                  std::vector<int>{0, 0, 0, 0}) == doctest::Approx(0.0));

  // both single-class
  CHECK(v_measure(std::vector<int>{3, 3}, std::vector<int>{1, 1}) ==
        doctest::Approx(1.0));

  CHECK_THROWS_AS((void)v_measure(std::vector<int>{0, 1},
                                  std::vector<int>{0}),
                  std::invalid_argument);
}

TEST_CASE("v-measure is symmetric and permutation invariant") {
  Rng rng(12);
  std::vector<int> a(50), b(50);
  for (std::size_t i = 0; i < 50; ++i) {
    a[i] = static_cast<int>(rng.uniform_index(4));
    b[i] = static_cast<int>(rng.uniform_index(3));
  }
  CHECK(v_measure(a, b) == doctest::Approx(v_measure(b, a)).epsilon(1e-12));

  std::vector<int> a_perm(a);
  for (auto& l : a_perm) l = (l + 11) * 13;  // injective relabeling
  CHECK(v_measure(a_perm, b) == doctest::Approx(v_measure(a, b)).epsilon(1e-12));
}

}  // TEST_SUITE

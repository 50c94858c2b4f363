#include <doctest.h>

#include <algorithm>
#include <set>

#include "imbcluster/kmeanspp.hpp"
#include "test_helpers.hpp"

using namespace imbcluster;

TEST_SUITE("kmeanspp") {

TEST_CASE("two points force both picks") {
  const PointSet p = testutil::points1d({0, 10});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto idx = dsquared_seed_indices(p, 2, rng);
    std::set<std::size_t> got(idx.begin(), idx.end());
    CHECK(got == std::set<std::size_t>{0, 1});
  }
}

TEST_CASE("k=1 returns one data point, deterministically per seed") {
  Rng rng(3);
  const PointSet p = testutil::random_points(9, 2, rng);
  Rng a(77), b(77);
  const PointSet ca = dsquared_seed(p, 1, a);
  const PointSet cb = dsquared_seed(p, 1, b);
  CHECK(ca == cb);
  bool found = false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.row(i) == ca.row(0)) found = true;
  CHECK(found);
}

TEST_CASE("errors on k > n") {
  const PointSet p = testutil::points1d({0, 1});
  Rng rng(0);
  CHECK_THROWS_AS((void)dsquared_seed(p, 3, rng), std::invalid_argument);
}

TEST_CASE("duplicate-only data falls back to uniform picks") {
  const PointSet p = testutil::points1d({5, 5, 5});
  Rng rng(1);
  const auto idx = dsquared_seed_indices(p, 3, rng);
  std::set<std::size_t> got(idx.begin(), idx.end());
  CHECK(got.size() == 3);  // exclusion still yields distinct indices
}

TEST_CASE("well-separated discs are both seeded almost always") {
  Rng data_rng(42);
  const auto data = testutil::two_discs(500, data_rng, 50.0);
  std::size_t hits = 0;
  const std::size_t runs = 1000;
  for (std::size_t run = 0; run < runs; ++run) {
    Rng rng(run);
    const auto idx = dsquared_seed_indices(data.points, 2, rng);
    const bool left = idx[0] < 500 || idx[1] < 500;
    const bool right = idx[0] >= 500 || idx[1] >= 500;
    hits += (left && right) ? 1 : 0;
  }
  CHECK(hits >= 990);  // >= 99% of 1000 seeded runs
}

TEST_CASE("lloyd fixtures") {
  const PointSet p = testutil::points1d({0, 2, 10, 12});
  const PointSet c0 = testutil::points1d({0, 12});
  CHECK(lloyd_refine(p, c0, 1) == testutil::points1d({1, 11}));
  CHECK(lloyd_refine(p, c0, 0) == c0);

  const PointSet fixed = testutil::points1d({1, 11});
  CHECK(lloyd_refine(p, fixed, 7) == fixed);  // already the centroids

  // empty clusters keep their center
  const PointSet far = testutil::points1d({0, 2, 10, 12});
  const PointSet c1 = testutil::points1d({6, 100});
  const PointSet refined = lloyd_refine(far, c1, 1);
  CHECK(refined.row(0) == Point{6.0});
  CHECK(refined.row(1) == Point{100.0});
}

TEST_CASE("round count formula") {
  CHECK(kmeanspp_rounds(0.1) == 5);  // ceil(log2(20))
  CHECK(kmeanspp_rounds(0.0625) == 5);
  CHECK(kmeanspp_rounds(1.0 / 64) == 7);
  CHECK_THROWS_AS((void)kmeanspp_rounds(0.2), std::invalid_argument);
  CHECK_THROWS_AS((void)kmeanspp_rounds(0.0), std::invalid_argument);
}

TEST_CASE("best-of selection improves monotonically in rounds") {
  Rng data_rng(9);
  const PointSet p = testutil::random_points(120, 2, data_rng, 4.0);
  auto total_dist = [&](const PointSet& c) {
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      double best = euclidean_dist(p[i], c[0]);
      for (std::size_t j = 1; j < c.size(); ++j)
        best = std::min(best, euclidean_dist(p[i], c[j]));
      total += best;
    }
    return total;
  };
  Rng rng(31);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t rounds = 1; rounds <= 5; ++rounds) {
    const PointSet c = best_of_kmeanspp_rounds(p, 3, rounds, rng);
    const double score = total_dist(c);
    CHECK(score <= prev + 1e-12);
    prev = score;
  }

  // practical mode is exactly one round
  Rng r1(5), r2(5);
  CHECK(best_of_kmeanspp(p, 3, 0.1, r1, true) ==
        best_of_kmeanspp_rounds(p, 3, 1, r2));
}

TEST_CASE("seeded determinism and distinct outputs") {
  Rng data_rng(10);
  const PointSet p = testutil::random_points(60, 3, data_rng);
  Rng a(123), b(123);
  const PointSet ca = best_of_kmeanspp(p, 4, 0.1, a);
  const PointSet cb = best_of_kmeanspp(p, 4, 0.1, b);
  CHECK(ca == cb);
  // all picks distinct data points
  std::set<std::vector<double>> rows;
  for (std::size_t i = 0; i < ca.size(); ++i) rows.insert(ca.row(i));
  CHECK(rows.size() == 4);
}

}  // TEST_SUITE

#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "imbcluster/datagen.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/metrics.hpp"
#include "imbcluster/pipeline.hpp"
#include "imbcluster/repro.hpp"
#include "test_helpers.hpp"

using namespace imbcluster;

TEST_SUITE("pipeline") {

TEST_CASE("approx-on-coreset equals plain approx below lambda") {
  Rng data_rng(1);
  const PointSet p = testutil::random_points(90, 2, data_rng);  // n <= 128
  Rng rng(2);
  const PointSet via_coreset = approx_on_coreset(p, 2, CoresetParams{}, rng);
  const PointSet direct =
      exhaustive_approx(p, 2, {.size_source = SizeSource::WeightMass}).centers;
  CHECK(via_coreset == direct);
}

TEST_CASE("approx-on-coreset is deterministic and stays inside the data") {
  Rng data_rng(4);
  const LabeledSet data = make_preset("fig2", 700, data_rng);
  Rng a(5), b(5);
  const PointSet ca = approx_on_coreset(data.points, 2, CoresetParams{}, a);
  const PointSet cb = approx_on_coreset(data.points, 2, CoresetParams{}, b);
  CHECK(ca == cb);

  // coreset points are data points, so the returned centers are too
  std::set<std::vector<double>> rows;
  for (std::size_t i = 0; i < data.points.size(); ++i)
    rows.insert(data.points.row(i));
  for (std::size_t i = 0; i < ca.size(); ++i)
    CHECK(rows.count(ca.row(i)) == 1);
}

TEST_CASE("choice tie goes to the first candidate") {
  Rng data_rng(6);
  const auto data = testutil::two_discs(60, data_rng);
  // two candidates that always produce the same (perfect) split
  const auto perfect = [](const PointSet& p, std::size_t, Rng&) {
    PointSet c(2);
    c.push_back(p[0]);
    c.push_back(p[p.size() - 1]);
    return c;
  };
  Rng rng(7);
  const ChoiceResult res = choice_cluster(
      data.points, 2, {{"first", perfect}, {"second", perfect}}, std::nullopt,
      rng);
  CHECK(res.chosen == "first");
}

TEST_CASE("choice separates two balanced discs") {
  Rng data_rng(8);
  const auto data = testutil::two_discs(200, data_rng);
  Rng rng(9);
  const ChoiceResult res = choice_cluster(
      data.points, 2, default_choice_candidates(CoresetParams{}), 1024, rng);
  // both candidates split the discs; the winner must too
  CHECK((isolates_outliers(res.labels, data.labels, 1) ||
         isolates_outliers(res.labels, data.labels, 0)));
}

TEST_CASE("choice score matches an independent recomputation") {
  Rng data_rng(10);
  const auto data = testutil::two_discs(50, data_rng);
  Rng rng(11);
  const ChoiceResult res = choice_cluster(
      data.points, 2, default_choice_candidates(CoresetParams{}),
      std::nullopt, rng);
  CHECK(res.score ==
        doctest::Approx(silhouette_full(data.points, res.labels))
            .epsilon(1e-9));
}

TEST_CASE("choice surfaces candidate failures") {
  const auto broken = [](const PointSet&, std::size_t, Rng&) -> PointSet {
    throw std::runtime_error("boom");
  };
  Rng rng(1);
  const PointSet p = testutil::points1d({0, 1, 2, 3});
  CHECK_THROWS_AS((void)choice_cluster(p, 2, {{"a", broken}, {"b", broken}},
                                       std::nullopt, rng),
                  std::runtime_error);
  CHECK_THROWS_AS(
      (void)choice_cluster(p, 2, {{"only", broken}}, std::nullopt, rng),
      std::invalid_argument);
}

TEST_CASE("choice prefers the separating candidate on fig1-style data") {
  CoresetParams coreset_params;  // edge-resolving sample size, as in repro
  coreset_params.lambda_override = 1024;
  std::size_t wins = 0;
  const std::size_t runs = 50;
  for (std::size_t run = 0; run < runs; ++run) {
    Rng run_rng(run);
    Rng data_rng = run_rng.derive("data");
    const LabeledSet data = make_preset("fig1", 0, data_rng);
    Rng rng = run_rng.derive("choice");
    const ChoiceResult res = choice_cluster(
        data.points, 2,
        default_choice_candidates(coreset_params, Objective::Fitting), 1024,
        rng);
    wins += isolates_outliers(res.labels, data.labels, 1) ? 1 : 0;
  }
  CHECK(wins >= 40);  // >= 80% of 50 runs
}

TEST_CASE("divisive tree structure") {
  Rng data_rng(12);

  SUBCASE("depth zero is a single leaf") {
    const PointSet p = testutil::random_points(10, 2, data_rng);
    Rng rng(1);
    const ClusterTree tree = divisive_tree(p, 0, DivisiveParams{}, rng);
    CHECK(tree.nodes.size() == 1);
    CHECK(tree.leaf_count() == 1);
    const auto labels = tree.labels();
    for (int l : labels) CHECK(l == 0);
  }

  SUBCASE("sixteen spread points split to sixteen leaves at depth 4") {
    // hierarchical block structure: every level's two groups are far apart,
    // so every split is forced and no branch starves
    std::vector<double> xs;
    for (int b = 0; b < 16; ++b)
      xs.push_back((b & 8) * 1000.0 + (b & 4) * 100.0 + (b & 2) * 10.0 +
                   (b & 1) * 1.0);
    const PointSet p = testutil::points1d(xs);
    Rng rng(2);
    const ClusterTree tree = divisive_tree(p, 4, DivisiveParams{}, rng);
    CHECK(tree.leaf_count() == 16);
    const auto labels = tree.labels();
    std::set<int> distinct(labels.begin(), labels.end());
    CHECK(distinct.size() == 16);

    // a flat grid has no such guarantee: the size-normalized objective may
    // cut unevenly, but the leaf cap still holds
    PointSet grid(2);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        const double q[2] = {x * 10.0, y * 10.0};
        grid.push_back(q);
      }
    Rng rng2(2);
    const ClusterTree grid_tree = divisive_tree(grid, 4, DivisiveParams{}, rng2);
    CHECK(grid_tree.leaf_count() <= 16);
    CHECK(grid_tree.leaf_count() >= 2);
  }

  SUBCASE("singletons and duplicates end early") {
    const PointSet p = testutil::points1d({1});
    Rng rng(3);
    const ClusterTree tree = divisive_tree(p, 5, DivisiveParams{}, rng);
    CHECK(tree.leaf_count() == 1);

    const PointSet dup = testutil::points1d({2, 2, 2, 2});
    Rng rng2(4);
    const ClusterTree dup_tree = divisive_tree(dup, 3, DivisiveParams{}, rng2);
    CHECK(dup_tree.leaf_count() == 1);  // starved split stays a leaf
  }

  SUBCASE("leaves partition the points") {
    const PointSet p = testutil::random_points(120, 2, data_rng, 4.0);
    Rng rng(5);
    const ClusterTree tree = divisive_tree(p, 3, DivisiveParams{}, rng);
    CHECK(tree.leaf_count() <= 8);
    const auto labels = tree.labels();
    CHECK(labels.size() == p.size());
    for (int l : labels) CHECK(l >= 0);
    std::vector<std::size_t> seen(p.size(), 0);
    for (const auto& node : tree.nodes) {
      if (!node.is_leaf()) continue;
      for (std::size_t i : node.members) ++seen[i];
    }
    for (std::size_t count : seen) CHECK(count == 1);
  }
}

TEST_CASE("every splitter produces a working tree") {
  Rng data_rng(13);
  const LabeledSet data = make_preset("appendixG2", 1, data_rng);
  for (const Splitter splitter :
       {Splitter::ApproxOnCoreset, Splitter::KMeansPP, Splitter::BiCriteria,
        Splitter::Choice}) {
    DivisiveParams params;
    params.splitter = splitter;
    Rng rng(14);
    const ClusterTree tree = divisive_tree(data.points, 3, params, rng);
    CHECK(tree.leaf_count() <= 8);
    CHECK(tree.leaf_count() >= 2);
    const auto labels = tree.labels();
    CHECK(labels.size() == data.points.size());
  }
}

TEST_CASE("tree json carries paths, counts and centers") {
  Rng data_rng(15);
  const PointSet p = testutil::random_points(40, 2, data_rng, 4.0);
  Rng rng(16);
  const ClusterTree tree = divisive_tree(p, 2, DivisiveParams{}, rng);
  const auto j = nlohmann::json::parse(tree_to_json(tree));
  CHECK(j.at("point_count") == 40);
  CHECK(j.at("max_depth") == 2);
  CHECK(j.at("nodes").size() == tree.nodes.size());
  CHECK(j.at("nodes")[0].at("path") == "");
  CHECK(j.at("nodes")[0].at("member_count") == 40);
  std::size_t leaves = 0;
  for (const auto& node : j.at("nodes"))
    if (node.at("leaf").get<bool>()) ++leaves;
  CHECK(leaves == tree.leaf_count());
}

TEST_CASE("splitter names round trip") {
  for (const Splitter s :
       {Splitter::ApproxOnCoreset, Splitter::KMeansPP, Splitter::BiCriteria,
        Splitter::Choice})
    CHECK(splitter_from_name(splitter_name(s)) == s);
  CHECK_THROWS_AS((void)splitter_from_name("nope"), std::invalid_argument);
}

}  // TEST_SUITE

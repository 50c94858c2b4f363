#include "imbcluster/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "imbcluster/approx.hpp"
#include "imbcluster/datagen.hpp"
#include "imbcluster/kmeanspp.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/pipeline.hpp"

namespace imbcluster {

QuartileStat quartiles(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
  };
  return {at(0.25), at(0.5), at(0.75)};
}

bool isolates_outliers(std::span<const int> pred, std::span<const int> truth,
                       int outlier_label) {
  if (pred.size() != truth.size())
    throw std::invalid_argument("isolates_outliers: length mismatch");
  int cluster = -1;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] != outlier_label) continue;
    if (cluster < 0)
      cluster = pred[i];
    else if (pred[i] != cluster)
      return false;
  }
  if (cluster < 0) return false;
  for (std::size_t i = 0; i < truth.size(); ++i)
    if (truth[i] != outlier_label && pred[i] == cluster) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

PointSet kmeans_baseline(const PointSet& points, std::size_t k, Rng& rng) {
  const PointSet seeds = best_of_kmeanspp(points, k, 0.1, rng, true);
  return lloyd_refine(points, seeds, 10);
}

struct MethodOutcome {
  std::vector<int> labels;
  double fitting = 0.0;
  double relaxed = 0.0;
  double time_ms = 0.0;
};

MethodOutcome run_flat(const PointSet& points, std::size_t k,
                       const std::string& method, Objective objective,
                       Rng& rng,
                       const CoresetParams& coreset_params = CoresetParams{}) {
  const auto start = Clock::now();
  PointSet centers;
  if (method == "approx") {
    ApproxOptions opt;
    opt.objective = objective;
    centers = exhaustive_approx(points, k, opt).centers;
  } else if (method == "approx-on-coreset") {
    centers = approx_on_coreset(points, k, coreset_params, rng, objective);
  } else if (method == "kmeanspp") {
    centers = kmeans_baseline(points, k, rng);
  } else if (method == "bicriteria") {
    centers = bicriteria(points, BiCriteriaParams{.k = k}, rng);
  } else {
    throw std::invalid_argument("run_flat: unknown method " + method);
  }
  MethodOutcome out;
  out.time_ms = ms_since(start);
  out.labels = assign(points, centers).labels;
  out.fitting = fitting_loss(points, centers);
  out.relaxed = relaxed_loss(points, centers);
  return out;
}

void summarize_losses(ReproSummary& summary) {
  std::map<std::string, std::vector<double>> columns;
  for (const auto& row : summary.rows) {
    const std::string key = row.dataset + "/" + row.method;
    columns[key + "/fitting_loss"].push_back(row.fitting);
    columns[key + "/relaxed_loss"].push_back(row.relaxed);
    columns[key + "/time_ms"].push_back(row.time_ms);
    if (row.method.find("depth") != std::string::npos)
      columns[key + "/variance_loss"].push_back(row.variance);
  }
  for (auto& [key, values] : columns)
    summary.stats[key] = quartiles(std::move(values));
}

void add_rates(ReproSummary& summary) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& row : summary.rows) {
    if (row.separated < 0) continue;
    auto& [hits, total] = tally[row.dataset + "/" + row.method];
    hits += row.separated == 1 ? 1 : 0;
    ++total;
  }
  for (const auto& [key, counts] : tally)
    summary.rates[key + "/separation_rate"] =
        static_cast<double>(counts.first) / static_cast<double>(counts.second);
}

// fig1: the motivation contrast. Our method minimizes the Def-1 style
// objective on a coreset; the baseline is seeded k-means with Lloyd. The
// separation check is strict (every outlier isolated, zero inliers), which
// needs the disc edge resolved in the coreset, hence the raised sample
// sizes (the 128 default targets loss quality, not exact membership).
constexpr std::size_t kFig1Lambda = 1024;
constexpr std::size_t kFig2Lambda = 512;

void run_fig1(ReproSummary& summary) {
  CoresetParams coreset_params;
  coreset_params.lambda_override = kFig1Lambda;
  for (std::size_t run = 0; run < summary.runs; ++run) {
    Rng run_rng(summary.seed + run);
    Rng data_rng = run_rng.derive("data");
    const LabeledSet data = make_preset("fig1", 0, data_rng);

    for (const char* method : {"approx-on-coreset", "kmeanspp"}) {
      Rng method_rng = run_rng.derive(method);
      MethodOutcome res = run_flat(data.points, 2, method, Objective::Fitting,
                                   method_rng, coreset_params);
      ReproRow row;
      row.run = run;
      row.dataset = "fig1";
      row.method = method;
      row.fitting = res.fitting;
      row.relaxed = res.relaxed;
      row.time_ms = res.time_ms;
      row.separated = isolates_outliers(res.labels, data.labels, 1) ? 1 : 0;
      summary.rows.push_back(std::move(row));
    }
  }
}

// fig2: the relaxed objective separates at n=625 and stops separating at
// n=1250.
void run_fig2(ReproSummary& summary) {
  CoresetParams coreset_params;
  coreset_params.lambda_override = kFig2Lambda;
  for (std::size_t n : {std::size_t{625}, std::size_t{1250}}) {
    const std::string dataset = "fig2-n" + std::to_string(n);
    for (std::size_t run = 0; run < summary.runs; ++run) {
      Rng run_rng(summary.seed + run);
      Rng data_rng = run_rng.derive(dataset);
      const LabeledSet data = make_preset("fig2", n, data_rng);
      Rng method_rng = run_rng.derive(dataset + ":approx-on-coreset");
      MethodOutcome res =
          run_flat(data.points, 2, "approx-on-coreset", Objective::Relaxed,
                   method_rng, coreset_params);
      ReproRow row;
      row.run = run;
      row.dataset = dataset;
      row.method = "approx-on-coreset";
      row.fitting = res.fitting;
      row.relaxed = res.relaxed;
      row.time_ms = res.time_ms;
      row.separated = isolates_outliers(res.labels, data.labels, 1) ? 1 : 0;
      summary.rows.push_back(std::move(row));
    }
  }
}

// appendixG1: flat methods on the 25n/n disc pair; losses normalized by the
// exact enumeration where it fits the budget.
void run_g1(ReproSummary& summary) {
  const std::string dataset = "appendixG1-n" + std::to_string(summary.n);
  for (std::size_t run = 0; run < summary.runs; ++run) {
    Rng run_rng(summary.seed + run);
    Rng data_rng = run_rng.derive("data");
    const LabeledSet data = make_preset("appendixG1", summary.n, data_rng);

    std::vector<std::string> methods = {"approx-on-coreset", "kmeanspp",
                                        "bicriteria"};
    if (enumeration_cost(data.points.size(), 2, 2) <= 1e9)
      methods.insert(methods.begin(), "approx");

    double approx_fitting = 0.0;
    for (const auto& method : methods) {
      Rng method_rng = run_rng.derive(method);
      MethodOutcome res =
          run_flat(data.points, 2, method, Objective::Relaxed, method_rng);
      if (method == "approx") approx_fitting = res.fitting;
      ReproRow row;
      row.run = run;
      row.dataset = dataset;
      row.method = method;
      row.fitting = res.fitting;
      row.relaxed = res.relaxed;
      row.time_ms = res.time_ms;
      row.separated = isolates_outliers(res.labels, data.labels, 1) ? 1 : 0;
      summary.rows.push_back(std::move(row));
    }
    if (approx_fitting > 0.0) {
      std::vector<ReproRow> normalized;
      for (std::size_t i = summary.rows.size() - methods.size();
           i < summary.rows.size(); ++i) {
        ReproRow norm = summary.rows[i];
        norm.method += "/normalized";
        norm.fitting = summary.rows[i].fitting / approx_fitting;
        norm.relaxed = 0.0;
        norm.separated = -1;  // rates live on the raw rows
        normalized.push_back(std::move(norm));
      }
      summary.rows.insert(summary.rows.end(), normalized.begin(),
                          normalized.end());
    }
  }
}

// appendixG2: divisive clustering with 3 splits, scored by the sum of
// cluster variances.
void run_g2(ReproSummary& summary) {
  const std::string dataset = "appendixG2-n" + std::to_string(summary.n);
  const std::size_t depth = 3;  // 2^3 = 8 clusters
  for (std::size_t run = 0; run < summary.runs; ++run) {
    Rng run_rng(summary.seed + run);
    Rng data_rng = run_rng.derive("data");
    const LabeledSet data = make_preset("appendixG2", summary.n, data_rng);

    for (const Splitter splitter :
         {Splitter::ApproxOnCoreset, Splitter::KMeansPP, Splitter::BiCriteria,
          Splitter::Choice}) {
      DivisiveParams params;
      params.splitter = splitter;
      Rng method_rng = run_rng.derive(std::string(splitter_name(splitter)));
      const auto start = Clock::now();
      const ClusterTree tree =
          divisive_tree(data.points, depth, params, method_rng);
      ReproRow row;
      row.run = run;
      row.dataset = dataset;
      row.method = std::string(splitter_name(splitter)) + "-depth3";
      row.time_ms = ms_since(start);
      row.variance = variance_loss(data.points, tree.labels());
      summary.rows.push_back(std::move(row));
    }
  }
}

}  // namespace

ReproSummary run_experiment(const std::string& experiment, std::size_t runs,
                            std::size_t n, std::uint64_t seed) {
  if (runs == 0)
    throw std::invalid_argument("run_experiment: runs must be >= 1");
  ReproSummary summary;
  summary.experiment = experiment;
  summary.runs = runs;
  summary.n = n;
  summary.seed = seed;

  if (experiment == "fig1")
    run_fig1(summary);
  else if (experiment == "fig2")
    run_fig2(summary);
  else if (experiment == "appendixG1")
    run_g1(summary);
  else if (experiment == "appendixG2")
    run_g2(summary);
  else
    throw std::invalid_argument("run_experiment: unknown experiment '" +
                                experiment + "'");

  summarize_losses(summary);
  add_rates(summary);
  return summary;
}

}  // namespace imbcluster

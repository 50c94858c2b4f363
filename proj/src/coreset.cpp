#include "imbcluster/coreset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "imbcluster/csv.hpp"
#include "imbcluster/kmeanspp.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/version.hpp"

namespace imbcluster {

namespace {

void validate(const CoresetParams& params) {
  if (params.k == 0) throw std::invalid_argument("coreset: k must be >= 1");
  if (!(params.delta > 0.0) || params.delta > 0.1)
    throw std::invalid_argument("coreset: delta must be in (0, 1/10]");
  if (!(params.epsilon > 0.0) || !(params.epsilon < 1.0))
    throw std::invalid_argument("coreset: epsilon must be in (0, 1)");
  if (params.lambda_override && *params.lambda_override == 0)
    throw std::invalid_argument("coreset: lambda override must be >= 1");
}

}  // namespace

std::size_t coreset_lambda(const CoresetParams& params, std::size_t n,
                           std::size_t dim) {
  if (params.lambda_override) return *params.lambda_override;
  if (params.mode == AlgoMode::Practical) return 128;
  const double lk = std::log2(static_cast<double>(params.k) + 1.0);
  const double ln = std::log2(std::max<double>(2.0, static_cast<double>(n)));
  const double d3 = std::pow(static_cast<double>(dim), 3.0);
  const double inner = static_cast<double>(params.k) * d3 *
                           std::log2(lk * ln + 1.0) +
                       std::log2(1.0 / params.delta);
  const double v = params.c_const * lk * std::pow(ln, 4.0) * inner /
                   (params.epsilon * params.epsilon);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(v)));
}

Sensitivities sensitivities(const PointSet& points, const PointSet& centers) {
  const Assignment a = assign(points, centers);
  Sensitivities out;
  out.cluster_sizes = a.sizes;
  out.s.resize(points.size());

  std::vector<double> divisor(centers.size(), 1.0);
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double l = std::log2(static_cast<double>(a.sizes[c]) + 1.0);
    divisor[c] = l * l;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t c = static_cast<std::size_t>(a.labels[i]);
    out.s[i] = euclidean_dist(points[i], centers[c]) / divisor[c];
    total += out.s[i];
  }
  if (!(total > 0.0))
    throw std::invalid_argument(
        "sensitivities: zero total loss; caller must short-circuit");
  for (double& v : out.s) v /= total;
  return out;
}

std::vector<std::pair<std::size_t, double>> sensitivity_sample(
    std::span<const double> s, std::size_t lambda, Rng& rng) {
  if (s.empty()) throw std::invalid_argument("sensitivity_sample: empty distribution");
  std::vector<double> cum(s.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0.0)
      throw std::invalid_argument("sensitivity_sample: negative probability");
    acc += s[i];
    cum[i] = acc;
  }
  if (!(acc > 0.0))
    throw std::invalid_argument("sensitivity_sample: zero total mass");

  std::vector<std::pair<std::size_t, double>> draws;
  draws.reserve(lambda);
  const double inv_lambda = 1.0 / static_cast<double>(lambda);
  for (std::size_t j = 0; j < lambda; ++j) {
    const double u = rng.uniform01() * acc;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx >= s.size()) idx = s.size() - 1;
    draws.emplace_back(idx, inv_lambda / s[idx]);
  }
  return draws;
}

Coreset build_coreset(const PointSet& points, const CoresetParams& params,
                      Rng& rng) {
  validate(params);
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("build_coreset: need at least 2 points");

  Coreset out;
  out.params = params;
  out.seed = rng.stream_seed();

  const std::size_t lambda = coreset_lambda(params, n, points.dim());
  out.lambda = lambda;
  if (n <= lambda) {
    out.data = WeightedSet::unit(points);
    out.center_count = 0;
    return out;
  }

  Rng seeding_rng = rng.derive("kmeanspp");
  const PointSet centers =
      best_of_kmeanspp(points, params.k, params.delta, seeding_rng,
                       params.mode == AlgoMode::Practical);
  const Assignment a = assign(points, centers);

  std::vector<double> center_weights(centers.size());
  for (std::size_t c = 0; c < centers.size(); ++c)
    center_weights[c] = static_cast<double>(a.sizes[c]);

  out.center_count = centers.size();
  if (fitting_loss(points, centers) == 0.0) {
    out.data = WeightedSet{centers, std::move(center_weights)};
    return out;
  }

  const Sensitivities sens = sensitivities(points, centers);
  Rng sample_rng = rng.derive("sample");
  const auto draws = sensitivity_sample(sens.s, lambda, sample_rng);

  WeightedSet data{centers, std::move(center_weights)};
  data.points.reserve(centers.size() + draws.size());
  for (const auto& [idx, weight] : draws) {
    data.points.push_back(points[idx]);
    data.weights.push_back(weight);
    data.weights[static_cast<std::size_t>(a.labels[idx])] -= weight;
  }
  out.data = std::move(data);
  return out;
}

void save_coreset(const Coreset& coreset, const std::filesystem::path& csv_path,
                  const std::filesystem::path& sidecar_path) {
  write_csv(csv_path, coreset.data.points, {}, &coreset.data.weights);

  nlohmann::json j;
  j["version"] = kVersion;
  j["seed"] = coreset.seed;
  j["center_count"] = coreset.center_count;
  j["params"]["k"] = coreset.params.k;
  j["params"]["delta"] = coreset.params.delta;
  j["params"]["epsilon"] = coreset.params.epsilon;
  j["params"]["mode"] =
      coreset.params.mode == AlgoMode::Practical ? "practical" : "theoretical";
  j["params"]["c_const"] = coreset.params.c_const;
  if (coreset.params.lambda_override)
    j["params"]["lambda"] = *coreset.params.lambda_override;
  else
    j["params"]["lambda"] = nullptr;
  j["lambda_used"] = coreset.lambda;

  std::ofstream out(sidecar_path);
  if (!out)
    throw std::runtime_error("save_coreset: cannot open " +
                             sidecar_path.string());
  out << j.dump(2) << '\n';
}

Coreset load_coreset(const std::filesystem::path& csv_path,
                     const std::filesystem::path& sidecar_path) {
  const CsvTable table = read_csv(csv_path);
  if (!table.weights)
    throw std::runtime_error("load_coreset: CSV has no weight column");

  std::ifstream in(sidecar_path);
  if (!in)
    throw std::runtime_error("load_coreset: cannot open " +
                             sidecar_path.string());
  nlohmann::json j;
  in >> j;

  Coreset out;
  out.data = WeightedSet{table.points, *table.weights};
  out.center_count = j.at("center_count").get<std::size_t>();
  out.lambda = j.at("lambda_used").get<std::size_t>();
  out.seed = j.at("seed").get<std::uint64_t>();
  const auto& p = j.at("params");
  out.params.k = p.at("k").get<std::size_t>();
  out.params.delta = p.at("delta").get<double>();
  out.params.epsilon = p.at("epsilon").get<double>();
  out.params.mode = p.at("mode").get<std::string>() == "practical"
                        ? AlgoMode::Practical
                        : AlgoMode::Theoretical;
  out.params.c_const = p.at("c_const").get<double>();
  if (!p.at("lambda").is_null())
    out.params.lambda_override = p.at("lambda").get<std::size_t>();
  return out;
}

}  // namespace imbcluster

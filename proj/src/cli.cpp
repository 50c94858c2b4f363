#include "imbcluster/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "imbcluster/approx.hpp"
#include "imbcluster/csv.hpp"
#include "imbcluster/datagen.hpp"
#include "imbcluster/kmeanspp.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/metrics.hpp"
#include "imbcluster/pipeline.hpp"
#include "imbcluster/quantize.hpp"
#include "imbcluster/repro.hpp"
#include "imbcluster/version.hpp"

namespace imbcluster {

namespace {

using nlohmann::json;

struct GenArgs {
  std::string preset;
  std::size_t n = 0;  // 0: preset default
  std::uint64_t seed = 0;
  std::string out;
};

struct ClusterArgs {
  std::string method = "approx-on-coreset";
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::string mode = "practical";
  std::optional<std::size_t> lambda;
  std::string objective = "relaxed";
  double delta = 0.1;
  double epsilon = 0.5;
  std::string in;
  std::string out;
  std::string report;
};

struct CoresetArgs {
  std::size_t k = 2;
  std::optional<std::size_t> lambda;
  double epsilon = 0.5;
  double delta = 0.1;
  std::string mode = "practical";
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
};

struct QuantizeArgs {
  std::string method = "flat";
  std::size_t k = 2;
  std::size_t depth = 4;
  std::string splitter = "approx-on-coreset";
  std::string objective = "relaxed";
  std::size_t border_strip = 0;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
};

struct ReproArgs {
  std::string experiment;
  std::size_t runs = 10;
  std::size_t n = 0;  // 0: preset default
  std::uint64_t seed = 0;
  std::string out;
};

AlgoMode parse_mode(const std::string& mode) {
  if (mode == "practical") return AlgoMode::Practical;
  if (mode == "theoretical") return AlgoMode::Theoretical;
  throw CLI::ValidationError("--mode", "must be practical or theoretical");
}

Objective parse_objective(const std::string& objective) {
  if (objective == "relaxed") return Objective::Relaxed;
  if (objective == "fitting") return Objective::Fitting;
  throw CLI::ValidationError("--objective", "must be relaxed or fitting");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

json params_json(const ClusterArgs& args) {
  json j;
  j["method"] = args.method;
  j["k"] = args.k;
  j["seed"] = args.seed;
  j["mode"] = args.mode;
  j["lambda"] = args.lambda ? json(*args.lambda) : json(nullptr);
  j["objective"] = args.objective;
  j["delta"] = args.delta;
  j["epsilon"] = args.epsilon;
  return j;
}

int cmd_gen(const GenArgs& args) {
  Rng rng(args.seed);
  const std::size_t n = args.n ? args.n : preset_default_n(args.preset);
  const LabeledSet data = make_preset(args.preset, n, rng);
  write_csv(args.out, data.points, {}, nullptr, &data.labels);
  std::cout << "wrote " << data.points.size() << " points to " << args.out
            << "\n";
  return 0;
}

int cmd_cluster(const ClusterArgs& args) {
  const CsvTable table = read_csv(args.in);
  const PointSet& points = table.points;
  const Objective objective = parse_objective(args.objective);

  CoresetParams coreset_params;
  coreset_params.k = args.k;
  coreset_params.delta = args.delta;
  coreset_params.epsilon = args.epsilon;
  coreset_params.mode = parse_mode(args.mode);
  coreset_params.lambda_override = args.lambda;

  Rng rng(args.seed);
  const auto start = std::chrono::steady_clock::now();

  PointSet centers;
  std::vector<int> labels;
  std::string chosen;
  if (args.method == "approx") {
    ApproxOptions opt;
    opt.objective = objective;
    WeightedSet data = table.weights ? WeightedSet{points, *table.weights}
                                     : WeightedSet::unit(points);
    centers = exhaustive_approx(data, args.k, opt).centers;
  } else if (args.method == "approx-on-coreset") {
    centers = approx_on_coreset(points, args.k, coreset_params, rng, objective);
  } else if (args.method == "kmeanspp") {
    const PointSet seeds = best_of_kmeanspp(points, args.k, args.delta, rng,
                                            coreset_params.mode ==
                                                AlgoMode::Practical);
    centers = lloyd_refine(points, seeds, 10);
  } else if (args.method == "bicriteria") {
    BiCriteriaParams bp;
    bp.k = args.k;
    bp.delta = args.delta;
    bp.mode = coreset_params.mode;
    bp.lambda_override = args.lambda;
    centers = bicriteria(points, bp, rng);
  } else if (args.method == "choice") {
    const ChoiceResult choice = choice_cluster(
        points, args.k, default_choice_candidates(coreset_params, objective),
        1024, rng);
    centers = choice.centers;
    labels = choice.labels;
    chosen = choice.chosen;
  } else {
    throw CLI::ValidationError("--method", "unknown method " + args.method);
  }
  if (labels.empty()) labels = assign(points, centers).labels;
  const double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  json report = params_json(args);
  report["version"] = kVersion;
  report["n"] = points.size();
  report["dim"] = points.dim();
  report["losses"]["fitting"] = fitting_loss(points, centers);
  report["losses"]["relaxed"] = relaxed_loss(points, centers);
  if (!chosen.empty()) report["chosen"] = chosen;
  {
    Rng srng = rng.derive("silhouette");
    try {
      report["silhouette"] = silhouette(points, labels, 1024, srng);
    } catch (const std::exception&) {
      report["silhouette"] = nullptr;  // fewer than 2 distinct labels
    }
  }
  json centers_json = json::array();
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto row = centers[i];
    centers_json.push_back(std::vector<double>(row.begin(), row.end()));
  }
  report["centers"] = std::move(centers_json);
  report["wall_time_ms"] = wall_ms;

  if (!args.out.empty()) write_csv(args.out, points, {}, nullptr, &labels);
  if (!args.report.empty()) write_text(args.report, report.dump(2) + "\n");
  std::cout << report["losses"].dump() << "\n";
  return 0;
}

int cmd_coreset(const CoresetArgs& args) {
  const CsvTable table = read_csv(args.in);
  CoresetParams params;
  params.k = args.k;
  params.delta = args.delta;
  params.epsilon = args.epsilon;
  params.mode = parse_mode(args.mode);
  params.lambda_override = args.lambda;

  Rng rng(args.seed);
  const Coreset coreset = build_coreset(table.points, params, rng);

  std::filesystem::path sidecar(args.out);
  sidecar.replace_extension(".json");
  save_coreset(coreset, args.out, sidecar);
  std::cout << "coreset size " << coreset.data.size() << " (centers "
            << coreset.center_count << ", lambda " << coreset.lambda
            << ") -> " << args.out << "\n";
  return 0;
}

int cmd_quantize(const QuantizeArgs& args) {
  const RgbImage input = read_image(args.in);
  QuantizeOptions options;
  options.method =
      args.method == "divisive" ? QuantizeMethod::Divisive : QuantizeMethod::Flat;
  if (args.method != "flat" && args.method != "divisive")
    throw CLI::ValidationError("--method", "must be flat or divisive");
  options.k = args.k;
  options.depth = args.depth;
  options.border_strip = args.border_strip;
  options.clustering.splitter = splitter_from_name(args.splitter);
  options.clustering.objective = parse_objective(args.objective);

  Rng rng(args.seed);
  const RgbImage output = quantize(input, options, rng);
  write_image(output, args.out);
  std::cout << "quantized " << output.width << "x" << output.height << " ("
            << distinct_colors(output) << " colors) -> " << args.out << "\n";
  return 0;
}

int cmd_repro(const ReproArgs& args) {
  const std::size_t n =
      args.n ? args.n
             : (is_preset(args.experiment) ? preset_default_n(args.experiment)
                                           : 1);
  const ReproSummary summary =
      run_experiment(args.experiment, args.runs, n, args.seed);

  std::filesystem::create_directories(args.out);
  const std::filesystem::path runs_csv =
      std::filesystem::path(args.out) / "runs.csv";
  {
    std::ofstream out(runs_csv);
    if (!out) throw std::runtime_error("cannot open " + runs_csv.string());
    out << std::setprecision(17);
    out << "run,dataset,method,fitting,relaxed,variance,time_ms,separated\n";
    for (const auto& row : summary.rows) {
      out << row.run << ',' << row.dataset << ',' << row.method << ','
          << row.fitting << ',' << row.relaxed << ',' << row.variance << ','
          << row.time_ms << ',' << row.separated << '\n';
    }
  }

  json j;
  j["experiment"] = summary.experiment;
  j["runs"] = summary.runs;
  j["n"] = summary.n;
  j["seed"] = summary.seed;
  j["version"] = kVersion;
  for (const auto& [key, value] : summary.rates) j["rates"][key] = value;
  for (const auto& [key, stat] : summary.stats) {
    j["stats"][key] = {{"q25", stat.q25},
                       {"median", stat.median},
                       {"q75", stat.q75}};
  }
  const std::filesystem::path summary_json =
      std::filesystem::path(args.out) / "summary.json";
  write_text(summary_json, j.dump(2) + "\n");
  std::cout << j["rates"].dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Size-normalized (imbalanced) point clustering toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic disc preset");
  gen_cmd->add_option("--preset", gen.preset, "fig1|fig2|appendixG1|appendixG2")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Preset scale parameter");
  gen_cmd->add_option("--seed", gen.seed, "Master seed");
  gen_cmd->add_option("--out", gen.out, "Output CSV")->required();

  ClusterArgs cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a CSV of points");
  cluster_cmd
      ->add_option("--method", cluster.method,
                   "approx|approx-on-coreset|kmeanspp|bicriteria|choice")
      ->required();
  cluster_cmd->add_option("--k", cluster.k, "Number of centers");
  cluster_cmd->add_option("--seed", cluster.seed, "Master seed");
  cluster_cmd->add_option("--mode", cluster.mode, "practical|theoretical");
  cluster_cmd->add_option("--lambda", cluster.lambda, "Sample-size override");
  cluster_cmd->add_option("--objective", cluster.objective, "relaxed|fitting");
  cluster_cmd->add_option("--delta", cluster.delta, "Failure bound");
  cluster_cmd->add_option("--epsilon", cluster.epsilon, "Coreset error");
  cluster_cmd->add_option("--in", cluster.in, "Input CSV")->required();
  cluster_cmd->add_option("--out", cluster.out, "Labels CSV");
  cluster_cmd->add_option("--report", cluster.report, "JSON report path");

  CoresetArgs coreset;
  auto* coreset_cmd = app.add_subcommand("coreset", "Build a coreset CSV");
  coreset_cmd->add_option("--k", coreset.k, "Query size the coreset targets");
  coreset_cmd->add_option("--lambda", coreset.lambda, "Sample-size override");
  coreset_cmd->add_option("--eps", coreset.epsilon, "Coreset error");
  coreset_cmd->add_option("--delta", coreset.delta, "Failure bound");
  coreset_cmd->add_option("--mode", coreset.mode, "practical|theoretical");
  coreset_cmd->add_option("--seed", coreset.seed, "Master seed");
  coreset_cmd->add_option("--in", coreset.in, "Input CSV")->required();
  coreset_cmd->add_option("--out", coreset.out, "Output CSV")->required();

  QuantizeArgs quantize;
  auto* quantize_cmd =
      app.add_subcommand("quantize", "Color-quantize a PNG/PPM image");
  quantize_cmd->add_option("--method", quantize.method, "flat|divisive");
  quantize_cmd->add_option("--k", quantize.k, "Flat palette size");
  quantize_cmd->add_option("--depth", quantize.depth, "Divisive split depth");
  quantize_cmd->add_option("--splitter", quantize.splitter,
                           "approx-on-coreset|kmeanspp|bicriteria|choice");
  quantize_cmd->add_option("--objective", quantize.objective,
                           "relaxed|fitting");
  quantize_cmd->add_option("--border-strip", quantize.border_strip,
                           "Pixels stripped from every edge");
  quantize_cmd->add_option("--seed", quantize.seed, "Master seed");
  quantize_cmd->add_option("--in", quantize.in, "Input image")->required();
  quantize_cmd->add_option("--out", quantize.out, "Output image")->required();

  ReproArgs repro;
  auto* repro_cmd =
      app.add_subcommand("repro", "Rerun a paper-style experiment");
  repro_cmd
      ->add_option("--experiment", repro.experiment,
                   "fig1|fig2|appendixG1|appendixG2")
      ->required();
  repro_cmd->add_option("--runs", repro.runs, "Repetitions");
  repro_cmd->add_option("--n", repro.n, "Preset scale parameter");
  repro_cmd->add_option("--seed", repro.seed, "Master seed");
  repro_cmd->add_option("--out", repro.out, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (cluster_cmd->parsed()) return cmd_cluster(cluster);
    if (coreset_cmd->parsed()) return cmd_coreset(coreset);
    if (quantize_cmd->parsed()) return cmd_quantize(quantize);
    if (repro_cmd->parsed()) return cmd_repro(repro);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace imbcluster

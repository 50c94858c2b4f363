#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "imbcluster/approx.hpp"
#include "imbcluster/datagen.hpp"
#include "imbcluster/kmeanspp.hpp"
#include "imbcluster/loss.hpp"
#include "imbcluster/metrics.hpp"
#include "imbcluster/pipeline.hpp"
#include "imbcluster/quantize.hpp"
#include "imbcluster/repro.hpp"
#include "imbcluster/version.hpp"

namespace py = pybind11;
using namespace imbcluster;

namespace {

PointSet to_points(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() == 1) {
    std::vector<double> data(arr.data(), arr.data() + arr.shape(0));
    return PointSet(static_cast<std::size_t>(arr.shape(0)), 1, std::move(data));
  }
  if (arr.ndim() != 2) throw std::invalid_argument("expected an (n, d) array");
  const auto n = static_cast<std::size_t>(arr.shape(0));
  const auto d = static_cast<std::size_t>(arr.shape(1));
  std::vector<double> data(arr.data(), arr.data() + n * d);
  return PointSet(n, d, std::move(data));
}

py::array_t<double> from_points(const PointSet& points) {
  py::array_t<double> out({points.size(), points.dim()});
  std::copy(points.data().begin(), points.data().end(),
            out.mutable_data());
  return out;
}

std::vector<double> to_weights(const py::object& weights, std::size_t n) {
  if (weights.is_none()) return std::vector<double>(n, 1.0);
  auto arr = py::cast<py::array_t<double, py::array::c_style | py::array::forcecast>>(weights);
  if (arr.ndim() != 1 || static_cast<std::size_t>(arr.shape(0)) != n)
    throw std::invalid_argument("weights must be a length-n 1-D array");
  return std::vector<double>(arr.data(), arr.data() + n);
}

std::vector<int> to_labels(const py::array_t<int, py::array::c_style | py::array::forcecast>& arr) {
  return std::vector<int>(arr.data(), arr.data() + arr.shape(0));
}

Objective objective_of(const std::string& name) {
  if (name == "relaxed") return Objective::Relaxed;
  if (name == "fitting") return Objective::Fitting;
  throw std::invalid_argument("objective must be 'relaxed' or 'fitting'");
}

SizeSource size_source_of(const std::string& name) {
  if (name == "mass") return SizeSource::WeightMass;
  if (name == "cardinality") return SizeSource::Cardinality;
  throw std::invalid_argument("size_source must be 'mass' or 'cardinality'");
}

AlgoMode mode_of(const std::string& name) {
  if (name == "practical") return AlgoMode::Practical;
  if (name == "theoretical") return AlgoMode::Theoretical;
  throw std::invalid_argument("mode must be 'practical' or 'theoretical'");
}

CoresetParams coreset_params_of(std::size_t k, double delta, double epsilon,
                                const std::string& mode,
                                std::optional<std::size_t> lambda) {
  CoresetParams p;
  p.k = k;
  p.delta = delta;
  p.epsilon = epsilon;
  p.mode = mode_of(mode);
  p.lambda_override = lambda;
  return p;
}

}  // namespace

PYBIND11_MODULE(_imbcluster, m) {
  m.doc() = "Size-normalized (imbalanced) point clustering";
  m.attr("__version__") = kVersion;

  m.def(
      "assign",
      [](py::array_t<double> points, py::array_t<double> centers) {
        const Assignment a = assign(to_points(points), to_points(centers));
        return py::array_t<int>(py::cast(a.labels));
      },
      py::arg("points"), py::arg("centers"),
      "Nearest-center labels; ties go to the lowest center index.");

  m.def(
      "fitting_loss",
      [](py::array_t<double> points, py::array_t<double> centers) {
        return fitting_loss(to_points(points), to_points(centers));
      },
      py::arg("points"), py::arg("centers"));

  m.def(
      "relaxed_loss",
      [](py::array_t<double> points, py::array_t<double> centers) {
        return relaxed_loss(to_points(points), to_points(centers));
      },
      py::arg("points"), py::arg("centers"));

  m.def(
      "weighted_relaxed_loss",
      [](py::array_t<double> points, py::object weights,
         py::array_t<double> centers, const std::string& size_source) {
        PointSet p = to_points(points);
        WeightedSet data{p, to_weights(weights, p.size())};
        return weighted_relaxed_loss(data, to_points(centers),
                                     size_source_of(size_source));
      },
      py::arg("points"), py::arg("weights"), py::arg("centers"),
      py::arg("size_source") = "mass");

  m.def(
      "variance_loss",
      [](py::array_t<double> points, py::array_t<int> labels) {
        auto l = to_labels(labels);
        return variance_loss(to_points(points), l);
      },
      py::arg("points"), py::arg("labels"));

  m.def(
      "exhaustive_approx",
      [](py::array_t<double> points, std::size_t k, py::object weights,
         const std::string& objective, const std::string& size_source,
         double max_cost) {
        PointSet p = to_points(points);
        WeightedSet data{p, to_weights(weights, p.size())};
        ApproxOptions opt;
        opt.objective = objective_of(objective);
        opt.size_source = size_source_of(size_source);
        opt.max_cost = max_cost;
        const ApproxResult res = exhaustive_approx(data, k, opt);
        return py::make_tuple(from_points(res.centers), res.indices, res.loss);
      },
      py::arg("points"), py::arg("k"), py::arg("weights") = py::none(),
      py::arg("objective") = "relaxed", py::arg("size_source") = "mass",
      py::arg("max_cost") = 1e9,
      "Exact k-subset minimizer; returns (centers, indices, loss).");

  m.def(
      "dsquared_seed",
      [](py::array_t<double> points, std::size_t k, std::uint64_t seed) {
        Rng rng(seed);
        return from_points(dsquared_seed(to_points(points), k, rng));
      },
      py::arg("points"), py::arg("k"), py::arg("seed") = 0);

  m.def(
      "lloyd_refine",
      [](py::array_t<double> points, py::array_t<double> centers,
         std::size_t iters) {
        return from_points(
            lloyd_refine(to_points(points), to_points(centers), iters));
      },
      py::arg("points"), py::arg("centers"), py::arg("iters") = 10);

  m.def(
      "best_of_kmeanspp",
      [](py::array_t<double> points, std::size_t k, double delta,
         std::uint64_t seed, bool practical) {
        Rng rng(seed);
        return from_points(
            best_of_kmeanspp(to_points(points), k, delta, rng, practical));
      },
      py::arg("points"), py::arg("k"), py::arg("delta") = 0.1,
      py::arg("seed") = 0, py::arg("practical") = true);

  m.def(
      "bicriteria",
      [](py::array_t<double> points, std::size_t k, double delta,
         const std::string& mode, std::optional<std::size_t> lambda,
         double c_const, std::uint64_t seed) {
        BiCriteriaParams params;
        params.k = k;
        params.delta = delta;
        params.mode = mode_of(mode);
        params.lambda_override = lambda;
        params.c_const = c_const;
        Rng rng(seed);
        return from_points(bicriteria(to_points(points), params, rng));
      },
      py::arg("points"), py::arg("k"), py::arg("delta") = 0.1,
      py::arg("mode") = "practical", py::arg("lambda") = py::none(),
      py::arg("c_const") = 1.0, py::arg("seed") = 0);

  m.def(
      "build_coreset",
      [](py::array_t<double> points, std::size_t k, double delta,
         double epsilon, const std::string& mode,
         std::optional<std::size_t> lambda, std::uint64_t seed) {
        Rng rng(seed);
        const Coreset c = build_coreset(
            to_points(points),
            coreset_params_of(k, delta, epsilon, mode, lambda), rng);
        return py::make_tuple(from_points(c.data.points),
                              py::array_t<double>(py::cast(c.data.weights)),
                              c.center_count);
      },
      py::arg("points"), py::arg("k"), py::arg("delta") = 0.1,
      py::arg("epsilon") = 0.5, py::arg("mode") = "practical",
      py::arg("lambda") = py::none(), py::arg("seed") = 0,
      "Sensitivity-sampling coreset; returns (points, weights, center_count).");

  m.def(
      "approx_on_coreset",
      [](py::array_t<double> points, std::size_t k, double delta,
         double epsilon, const std::string& mode,
         std::optional<std::size_t> lambda, const std::string& objective,
         std::uint64_t seed) {
        Rng rng(seed);
        return from_points(approx_on_coreset(
            to_points(points), k,
            coreset_params_of(k, delta, epsilon, mode, lambda), rng,
            objective_of(objective)));
      },
      py::arg("points"), py::arg("k"), py::arg("delta") = 0.1,
      py::arg("epsilon") = 0.5, py::arg("mode") = "practical",
      py::arg("lambda") = py::none(), py::arg("objective") = "relaxed",
      py::arg("seed") = 0);

  m.def(
      "choice_cluster",
      [](py::array_t<double> points, std::size_t k,
         std::optional<std::size_t> sample_size, const std::string& objective,
         std::uint64_t seed) {
        Rng rng(seed);
        const ChoiceResult res = choice_cluster(
            to_points(points), k,
            default_choice_candidates(CoresetParams{.k = k},
                                      objective_of(objective)),
            sample_size, rng);
        return py::make_tuple(py::array_t<int>(py::cast(res.labels)),
                              from_points(res.centers), res.chosen, res.score);
      },
      py::arg("points"), py::arg("k"), py::arg("sample_size") = 1024,
      py::arg("objective") = "relaxed", py::arg("seed") = 0,
      "Returns (labels, centers, chosen_method, silhouette).");

  m.def(
      "divisive_labels",
      [](py::array_t<double> points, std::size_t depth,
         const std::string& splitter, const std::string& objective,
         std::uint64_t seed) {
        DivisiveParams params;
        params.splitter = splitter_from_name(splitter);
        params.objective = objective_of(objective);
        Rng rng(seed);
        const ClusterTree tree =
            divisive_tree(to_points(points), depth, params, rng);
        return py::array_t<int>(py::cast(tree.labels()));
      },
      py::arg("points"), py::arg("depth"),
      py::arg("splitter") = "approx-on-coreset",
      py::arg("objective") = "relaxed", py::arg("seed") = 0);

  m.def(
      "silhouette",
      [](py::array_t<double> points, py::array_t<int> labels,
         std::optional<std::size_t> sample_size, std::uint64_t seed) {
        Rng rng(seed);
        auto l = to_labels(labels);
        return silhouette(to_points(points), l, sample_size, rng);
      },
      py::arg("points"), py::arg("labels"), py::arg("sample_size") = py::none(),
      py::arg("seed") = 0);

  m.def(
      "v_measure",
      [](py::array_t<int> a, py::array_t<int> b) {
        auto la = to_labels(a);
        auto lb = to_labels(b);
        return v_measure(la, lb);
      },
      py::arg("true_labels"), py::arg("pred_labels"));

  m.def(
      "make_preset",
      [](const std::string& name, std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        const LabeledSet data = make_preset(name, n ? n : preset_default_n(name), rng);
        return py::make_tuple(from_points(data.points),
                              py::array_t<int>(py::cast(data.labels)));
      },
      py::arg("name"), py::arg("n") = 0, py::arg("seed") = 0,
      "Returns (points, labels); n=0 uses the preset default.");

  m.def(
      "sample_disc",
      [](double cx, double cy, double radius, std::size_t count,
         std::uint64_t seed) {
        Rng rng(seed);
        return from_points(sample_disc({{cx, cy}, radius, count, 0}, rng));
      },
      py::arg("cx"), py::arg("cy"), py::arg("radius"), py::arg("count"),
      py::arg("seed") = 0);

  m.def(
      "quantize_image",
      [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> img,
         const std::string& method, std::size_t k, std::size_t depth,
         const std::string& splitter, std::size_t border_strip,
         std::uint64_t seed) {
        if (img.ndim() != 3 || img.shape(2) != 3)
          throw std::invalid_argument("expected an (h, w, 3) uint8 array");
        RgbImage image = make_image(static_cast<std::size_t>(img.shape(1)),
                                    static_cast<std::size_t>(img.shape(0)));
        std::copy(img.data(), img.data() + image.pixels.size(),
                  image.pixels.begin());
        QuantizeOptions options;
        options.method = method == "divisive" ? QuantizeMethod::Divisive
                                              : QuantizeMethod::Flat;
        options.k = k;
        options.depth = depth;
        options.border_strip = border_strip;
        options.clustering.splitter = splitter_from_name(splitter);
        Rng rng(seed);
        const RgbImage out = quantize(image, options, rng);
        py::array_t<std::uint8_t> result(
            {out.height, out.width, std::size_t{3}});
        std::copy(out.pixels.begin(), out.pixels.end(), result.mutable_data());
        return result;
      },
      py::arg("image"), py::arg("method") = "flat", py::arg("k") = 2,
      py::arg("depth") = 4, py::arg("splitter") = "approx-on-coreset",
      py::arg("border_strip") = 0, py::arg("seed") = 0,
      "Cluster the pixels and recolor each with its cluster mean.");
}

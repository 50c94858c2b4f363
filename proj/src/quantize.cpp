#include "imbcluster/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "imbcluster/loss.hpp"

namespace imbcluster {

PointSet flatten(const RgbImage& image) {
  PointSet out(3);
  out.reserve(image.pixel_count());
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    const std::uint8_t* px = image.pixels.data() + 3 * i;
    const double p[3] = {static_cast<double>(px[0]),
                         static_cast<double>(px[1]),
                         static_cast<double>(px[2])};
    out.push_back(p);
  }
  return out;
}

namespace {

std::uint8_t to_byte(double v) {
  const double r = std::round(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

}  // namespace

RgbImage unflatten(const PointSet& points, std::size_t width,
                   std::size_t height) {
  if (points.size() != width * height)
    throw std::invalid_argument("unflatten: pixel count mismatch");
  if (points.dim() != 3)
    throw std::invalid_argument("unflatten: points must be 3-D");
  RgbImage img = make_image(width, height);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t c = 0; c < 3; ++c) img.pixels[3 * i + c] = to_byte(p[c]);
  }
  return img;
}

RgbImage strip_border(const RgbImage& image, std::size_t border) {
  if (border == 0) return image;
  if (image.width <= 2 * border || image.height <= 2 * border)
    throw std::invalid_argument("strip_border: nothing left after stripping");
  RgbImage out = make_image(image.width - 2 * border, image.height - 2 * border);
  for (std::size_t y = 0; y < out.height; ++y)
    std::copy_n(image.px(border, y + border), 3 * out.width, out.px(0, y));
  return out;
}

RgbImage quantize(const RgbImage& image, const QuantizeOptions& options,
                  Rng& rng) {
  const RgbImage cropped = strip_border(image, options.border_strip);
  if (cropped.pixel_count() == 0)
    throw std::invalid_argument("quantize: empty image");
  const PointSet pixels = flatten(cropped);

  std::vector<int> labels;
  std::size_t n_clusters = 0;
  if (options.method == QuantizeMethod::Flat) {
    if (options.k == 0)
      throw std::invalid_argument("quantize: k must be >= 1");
    if (options.clustering.splitter == Splitter::BiCriteria)
      throw std::invalid_argument(
          "quantize: flat mode needs exactly k centers; bicriteria returns "
          "more, use divisive instead");
    if (options.k >= pixels.size()) {
      // fewer pixels than colors requested: every pixel keeps its color
      return cropped;
    }
    const PointSet centers =
        split_centers(pixels, options.k, options.clustering, rng);
    labels = assign(pixels, centers).labels;
    n_clusters = centers.size();
  } else {
    const ClusterTree tree =
        divisive_tree(pixels, options.depth, options.clustering, rng);
    labels = tree.labels();
    n_clusters = tree.leaf_count();
  }

  // mean color per cluster
  std::vector<double> sums(3 * n_clusters, 0.0);
  std::vector<std::size_t> counts(n_clusters, 0);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const auto p = pixels[i];
    const auto c = static_cast<std::size_t>(labels[i]);
    for (std::size_t j = 0; j < 3; ++j) sums[3 * c + j] += p[j];
    ++counts[c];
  }

  RgbImage out = make_image(cropped.width, cropped.height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    for (std::size_t j = 0; j < 3; ++j)
      out.pixels[3 * i + j] =
          to_byte(sums[3 * c + j] / static_cast<double>(counts[c]));
  }
  return out;
}

std::size_t distinct_colors(const RgbImage& image) {
  std::unordered_set<std::uint32_t> seen;
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    const std::uint8_t* px = image.pixels.data() + 3 * i;
    seen.insert(static_cast<std::uint32_t>(px[0]) << 16 |
                static_cast<std::uint32_t>(px[1]) << 8 | px[2]);
  }
  return seen.size();
}

}  // namespace imbcluster

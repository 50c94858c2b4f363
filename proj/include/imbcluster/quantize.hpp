#pragma once

#include "imbcluster/image.hpp"
#include "imbcluster/pipeline.hpp"

namespace imbcluster {

// Pixel (r,g,b) -> 3-D point, raw 0-255 values, row-major order preserved.
PointSet flatten(const RgbImage& image);

// Inverse of flatten; values are rounded to the nearest integer and clamped
// to [0, 255].
RgbImage unflatten(const PointSet& points, std::size_t width,
                   std::size_t height);

RgbImage strip_border(const RgbImage& image, std::size_t border);

enum class QuantizeMethod { Flat, Divisive };

struct QuantizeOptions {
  QuantizeMethod method = QuantizeMethod::Flat;
  std::size_t k = 2;      // flat palette size
  std::size_t depth = 4;  // divisive split depth; palette <= 2^depth
  std::size_t border_strip = 0;
  DivisiveParams clustering;  // splitter, objective, coreset params
};

// Clusters the flattened pixels and recolors every pixel with its cluster's
// mean color. Output dimensions shrink by 2*border_strip per axis.
RgbImage quantize(const RgbImage& image, const QuantizeOptions& options,
                  Rng& rng);

std::size_t distinct_colors(const RgbImage& image);

}  // namespace imbcluster

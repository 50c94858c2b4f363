#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "imbcluster/points.hpp"
#include "imbcluster/rng.hpp"

namespace imbcluster {

struct DiscSpec {
  std::array<double, 2> center{0.0, 0.0};
  double radius = 1.0;
  std::size_t count = 1;
  int class_label = 0;
};

// count points uniform over the disc area: radius scales with sqrt(u),
// angle is uniform. Exactly two draws per point.
PointSet sample_disc(const DiscSpec& spec, Rng& rng);

struct LabeledSet {
  PointSet points;
  std::vector<int> labels;
};

// Disc-mixture presets:
//   fig1:       1250 inliers in the unit disc + 25 outliers, r=0.1 at (2,0)
//   fig2:       n inliers + 25 outliers, r=0.1 at (2,0)
//   appendixG1: 25n inliers + n outliers, r=0.1 at (2.25,0)
//   appendixG2: 250n inliers + 10n at (2.25,0) + 10n at (2.25,2.25), r=0.1
// Labels follow the source disc. fig1 ignores n.
LabeledSet make_preset(std::string_view name, std::size_t n, Rng& rng);

std::size_t preset_default_n(std::string_view name);
bool is_preset(std::string_view name);

}  // namespace imbcluster

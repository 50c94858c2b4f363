#include "imbcluster/datagen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace imbcluster {

PointSet sample_disc(const DiscSpec& spec, Rng& rng) {
  if (!(spec.radius > 0.0))
    throw std::invalid_argument("sample_disc: radius must be positive");
  if (spec.count == 0)
    throw std::invalid_argument("sample_disc: count must be >= 1");
  PointSet out(2);
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double r = spec.radius * std::sqrt(rng.uniform01());
    const double theta = 2.0 * std::numbers::pi * rng.uniform01();
    const double p[2] = {spec.center[0] + r * std::cos(theta),
                         spec.center[1] + r * std::sin(theta)};
    out.push_back(p);
  }
  return out;
}

namespace {

LabeledSet from_discs(const std::vector<DiscSpec>& discs, Rng& rng) {
  LabeledSet out;
  out.points = PointSet(2);
  for (std::size_t i = 0; i < discs.size(); ++i) {
    Rng disc_rng = rng.derive("disc:" + std::to_string(i));
    const PointSet pts = sample_disc(discs[i], disc_rng);
    out.points.append(pts);
    out.labels.insert(out.labels.end(), discs[i].count, discs[i].class_label);
  }
  return out;
}

}  // namespace

LabeledSet make_preset(std::string_view name, std::size_t n, Rng& rng) {
  if (name != "fig1" && n == 0)
    throw std::invalid_argument("make_preset: n must be >= 1");
  if (name == "fig1")
    return from_discs({{{0.0, 0.0}, 1.0, 1250, 0}, {{2.0, 0.0}, 0.1, 25, 1}},
                      rng);
  if (name == "fig2")
    return from_discs({{{0.0, 0.0}, 1.0, n, 0}, {{2.0, 0.0}, 0.1, 25, 1}}, rng);
  if (name == "appendixG1")
    return from_discs(
        {{{0.0, 0.0}, 1.0, 25 * n, 0}, {{2.25, 0.0}, 0.1, n, 1}}, rng);
  if (name == "appendixG2")
    return from_discs({{{0.0, 0.0}, 1.0, 250 * n, 0},
                       {{2.25, 0.0}, 0.1, 10 * n, 1},
                       {{2.25, 2.25}, 0.1, 10 * n, 2}},
                      rng);
  throw std::invalid_argument("make_preset: unknown preset '" +
                              std::string(name) + "'");
}

std::size_t preset_default_n(std::string_view name) {
  if (name == "fig1") return 1250;
  if (name == "fig2") return 625;
  if (name == "appendixG1") return 5;
  if (name == "appendixG2") return 1;
  throw std::invalid_argument("preset_default_n: unknown preset '" +
                              std::string(name) + "'");
}

bool is_preset(std::string_view name) {
  return name == "fig1" || name == "fig2" || name == "appendixG1" ||
         name == "appendixG2";
}

}  // namespace imbcluster

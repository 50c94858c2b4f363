#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace imbcluster {

// Deterministic random source used by every randomized routine.
//
// A stage derives private sub-streams from its Rng with fixed string labels
// ("round:3", "sample", ...), so a single master seed reproduces a whole
// pipeline bit for bit no matter how the stages are composed. Uniform doubles
// and bounded integers are generated straight from the mt19937_64 word stream;
// the <random> distribution classes are never used because their output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Child stream keyed by (this stream's seed, label). Does not consume
  // state from the parent.
  Rng derive(std::string_view label) const;

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  // Unbiased draw from [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n);

  std::uint64_t stream_seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 gen_;
};

}  // namespace imbcluster

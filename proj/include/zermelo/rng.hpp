// zermelo - seeded splittable counter-based random sampling
//
// Draw i of a stream is SplitMix64(key + i * golden), a pure function of
// (key, i); substreams derive a fresh key by hashing a stream id into the
// parent key. Nothing is stateful beyond the draw counter, so results are
// identical however samples are distributed across workers.
#pragma once

#include <array>
#include <cstdint>

#include "zermelo/linalg.hpp"

namespace zermelo {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kKeyTweak)) {}

  // independent substream; pure function of (parent key, stream id)
  CounterRng split(std::uint64_t stream) const {
    CounterRng child(0);
    child.key_ = mix(key_ ^ mix(stream + kStreamTweak));
    child.counter_ = 0;
    return child;
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

  // uniform in [0, 1), 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (one value per call; pair partner unused)
  double normal();

  // uniform in the closed 4-ball of the given radius (rejection from a cube)
  Vec4 in_ball(double radius);

  // uniform on the Euclidean unit 3-sphere in R^4
  Vec4 on_sphere();

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kKeyTweak = 0xD1B54A32D192ED03ull;
  static constexpr std::uint64_t kStreamTweak = 0x632BE59BD9B4E019ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace zermelo

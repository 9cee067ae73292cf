#pragma once

#include <cstdint>

namespace qmagic {

// splitmix64: tiny splittable 64-bit generator. Chosen over <random>
// engines because the sequence (and the Box-Muller normals below) must be
// reproducible bit-for-bit across standard-library implementations, and
// because substreams derived from (seed, index) make partitioned runs
// replayable. Generator family is recorded in output metadata as
// "splitmix64-boxmuller".
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Decorrelated stream for partition `idx` of a run seeded with `seed`.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t idx) {
    return SplitMix64(mix(seed ^ mix(idx + 0x9E3779B97F4A7C15ull)));
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller pair of standard normals. u1 is drawn from (0, 1] so the
  // log argument never vanishes.
  void normal_pair(double& z0, double& z1);

 private:
  std::uint64_t state_;
};

inline constexpr const char* kRngFamily = "splitmix64-boxmuller";

}  // namespace qmagic

#pragma once

#include <cstdint>
#include <random>

namespace recluster {

// Deterministic random stream. All randomness in the simulator flows through
// this wrapper so that runs are reproducible bit-for-bit across platforms;
// std::uniform_*_distribution is implementation-defined and is avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in {0, ..., n-1}; n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) {
    // rejection sampling, no modulo bias
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r < threshold);
    return r % n;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace recluster

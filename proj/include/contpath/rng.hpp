#pragma once

#include <cstdint>

namespace contpath {

// Counter-style generator built on the splitmix64 finalizer.  Streams derived
// from (seed, stream) are independent, so Monte-Carlo work can be sharded and
// merged deterministically; identical (seed, stream) reproduces the same
// sequence on every platform (pure 64-bit integer arithmetic).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0,1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace contpath

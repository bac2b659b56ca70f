#pragma once

#include <cstdint>

namespace cstar {

// Portable 64-bit linear congruential generator (Knuth MMIX constants).
// All randomized demo matrices draw from this generator so that runs are
// bit-reproducible across platforms and languages.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform double in [0, 1) built from the top 53 bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

 private:
  std::uint64_t state_;
};

}  // namespace cstar

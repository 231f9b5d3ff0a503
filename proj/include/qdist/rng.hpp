#pragma once

#include <cmath>
#include <cstdint>

namespace qdist {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the repository-wide PRNG
// because the whole generator fits in a dozen lines and can be reproduced
// bit-for-bit in any language: given the same 64-bit seed, every consumer
// of random instances sees identical streams.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform01() maps the top 53 bits to [0, 1); gaussian() is Box-Muller on
// two consecutive outputs (the first shifted into (0, 1] so log never sees 0).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * kInv53; }

  // (0, 1]
  double uniform01_open_low() {
    return static_cast<double>((next_u64() >> 11) + 1) * kInv53;
  }

  // standard normal, Box-Muller; consumes two outputs per pair
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // exponential with unit rate
  double exponential() { return -std::log(uniform01_open_low()); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  static constexpr double kPi = 3.14159265358979323846;

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// O(1) derivation of a per-item seed from (seed, index): the index-th output
// of the SplitMix64 stream started at `seed`. Used so that suite trials can
// be generated independently (and therefore in parallel) with results
// identical to a sequential run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed + (index + 1) * SplitMix64::kGamma);
}

}  // namespace qdist

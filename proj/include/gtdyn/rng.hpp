#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace gtdyn {

/// SplitMix64 finalizer; used to whiten seeds and to derive per-task streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Stable per-task seed: independent of how tasks are partitioned over
/// threads, so batch results do not depend on the job count.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Deterministic RNG wrapper. The seed fully determines every draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix64(seed + 0x9e3779b97f4a7c15ULL)) {}

  /// Uniform on the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential waiting time by inverse CDF; strictly positive.
  double exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("Rng::exponential: rate must be positive");
    return -std::log(uniform01()) / rate;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gtdyn

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace tubal {

// splitmix64 step; the whole toolkit derives its randomness from this
// generator so that results are bit-reproducible across platforms
// (no reliance on implementation-defined std::distributions).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent child seed from (seed, stream). Used to split
// a master seed into per-trial / per-sample streams: stream indices are
// mixed through splitmix64 twice so nearby indices give unrelated states.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x2545f4914f6cdd1dULL * (stream + 1));
  splitmix64_next(s);
  splitmix64_next(s);
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // warm up so that seed 0 does not emit a zero word first
    splitmix64_next(state_);
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // uniform on [0, 1) with 53 bits of mantissa
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // standard normal via Box-Muller; pairs are cached
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    // avoid log(0)
    while (u1 <= 0.0) u1 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  // +1 or -1 with equal probability
  double rademacher() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace tubal

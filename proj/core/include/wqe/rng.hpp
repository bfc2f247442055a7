#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "wqe/matrix.hpp"

namespace wqe {

// Immutable key of a random stream. Identical (seed, stream_index) pairs
// produce identical draws no matter which worker consumes them, which is what
// makes campaigns independent of the parallelism degree.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

// Counter-based generator: draw i of a stream is a finaliser applied to
// key + i * golden_ratio, so there is no hidden shared state.
class Rng {
 public:
  explicit Rng(RngStream stream) {
    const std::uint64_t k1 = mix(stream.seed ^ 0xa3ec4e93c0a1b2c5ULL);
    const std::uint64_t k2 = mix(stream.stream_index ^ 0x9e3779b97f4a7c15ULL);
    base_ = mix(k1 ^ ((k2 << 1) | (k2 >> 63)));
  }

  std::uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix(base_ + counter_);
  }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
  }

  // Standard complex normal, E|z|^2 = 1.
  cxd complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cxd(re, im) * std::numbers::sqrt2 / 2.0;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace wqe

#pragma once

#include <cmath>
#include <cstdint>

namespace nsbox {

// SplitMix64. All randomness in the library flows through this generator so
// that seeded runs are bit-identical across platforms (std:: distributions
// are implementation-defined and therefore avoided).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Derives an independent stream, e.g. one per optimizer start or per
  // Monte Carlo sample; reduction order then cannot matter.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 base(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    base.next();
    return base;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Bernoulli(p).
  bool next_bool(double p) { return next_double() < p; }

  // Standard normal, Box-Muller. One value per call; the cosine branch only.
  double next_normal() {
    double u = 0.0;
    while (u == 0.0) u = next_double();
    double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
  }

private:
  std::uint64_t state_;
};

}  // namespace nsbox

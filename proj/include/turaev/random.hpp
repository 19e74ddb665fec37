#pragma once

// Seeded draws that are reproducible across standard libraries. The
// std::*_distribution templates are implementation-defined, so only the raw
// mt19937_64 stream (whose output is fixed by the standard) is used.

#include <complex>
#include <cstdint>
#include <random>

namespace turaev {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Entries of the unit square [-1,1] x [-1,1].
  std::complex<double> complex_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace turaev

#ifndef SWARMDIFF_RNG_HPP
#define SWARMDIFF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace swarmdiff {

/// Deterministic random stream. Every draw is an explicit conversion of raw
/// engine output, so sequences do not depend on the standard library's
/// distribution implementations. One stream per simulation run; never shared
/// across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Exponential waiting time with the given rate (mean 1/rate).
  double exponential(double rate) {
    return -std::log1p(-uniform()) / rate;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swarmdiff

#endif

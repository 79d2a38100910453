#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace pat {

// Seeded RNG with explicitly specified distributions. The standard
// distributions are implementation-defined, so every draw here is spelled
// out to keep runs reproducible across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

  std::uint32_t next_u32() { return engine_(); }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling keeps the
  // draw unbiased.
  std::uint32_t uniform(std::uint32_t bound) {
    const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
    std::uint32_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  std::size_t index(std::size_t size) { return uniform(static_cast<std::uint32_t>(size)); }

  // Uniform in [0, 1).
  double real() { return engine_() * 0x1p-32; }

  bool bernoulli(double p) { return real() < p; }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = real();
    const double v = real();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * std::numbers::pi * v);
    have_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * v);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform(static_cast<std::uint32_t>(i))]);
    }
  }

 private:
  std::mt19937 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pat

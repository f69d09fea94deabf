#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pderm {

// Seeded generator with self-contained uniform/normal transforms so that a
// (config, seed) pair reproduces identical streams regardless of the C++
// standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  int uniform_index(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Uniform in (0, 1].
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pderm

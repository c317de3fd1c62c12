#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zhardy {

// Deterministic RNG for experiments. All sampling goes through this wrapper
// (never through std::uniform_real_distribution, whose output is not pinned
// by the standard) so a given seed yields identical streams on every
// platform and thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // log-uniform on [a, b], 0 < a < b.
    double log_uniform(double a, double b) {
        return std::exp(std::log(a) + (std::log(b) - std::log(a)) * uniform01());
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace zhardy

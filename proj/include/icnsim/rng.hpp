#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace icnsim {

// Seeded random stream with a fixed draw discipline, so identically seeded
// runs replay bit-for-bit. Raw engine words are mapped to doubles/ints here
// instead of through std::uniform_*_distribution, whose sequences differ
// between standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  int uniform_int(int n) {
    assert(n >= 1);
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX / bound * bound;
    std::uint64_t draw = gen_();
    while (draw >= limit) {
      draw = gen_();
    }
    return static_cast<int>(draw % bound);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace icnsim

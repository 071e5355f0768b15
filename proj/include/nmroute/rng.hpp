#pragma once

#include <cstdint>
#include <random>

namespace nmroute {

// Seeded generator with fixed, portable output. mt19937_64 is fully
// specified by the standard; the uniform transforms below are hand-rolled
// because std:: distributions are implementation-defined. Identical seeds
// must produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  std::uint32_t uniform_int(std::uint32_t lo, std::uint32_t hi_inclusive) {
    return lo + static_cast<std::uint32_t>(
                    next_below(std::uint64_t{hi_inclusive} - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nmroute

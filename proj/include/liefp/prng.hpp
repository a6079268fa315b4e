#pragma once

// Deterministic 64-bit PRNG (splitmix64). Used for every seeded sampling
// path so results are reproducible across platforms; reports that record a
// generator name record "splitmix64".

#include <cstdint>
#include <vector>

namespace liefp {

inline constexpr const char* kPrngName = "splitmix64";

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n) by rejection from the top of the range.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t min = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= min) return x % n;
    }
  }

  // Uniform nonzero vector in F_p^d.
  std::vector<std::uint32_t> nonzero_vector(std::size_t d, std::uint32_t p) {
    std::vector<std::uint32_t> v(d);
    for (;;) {
      bool all_zero = true;
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = static_cast<std::uint32_t>(below(p));
        all_zero = all_zero && v[i] == 0;
      }
      if (!all_zero) return v;
    }
  }
};

}  // namespace liefp

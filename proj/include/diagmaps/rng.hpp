#pragma once

#include <cstdint>

namespace diagmaps {

// splitmix64. std::uniform_int_distribution is implementation-defined, which
// would break byte-identical output across toolchains, so randomized checks
// draw from this instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = span == 0 ? 0 : UINT64_MAX - UINT64_MAX % span;
    for (;;) {
      std::uint64_t r = next_u64();
      if (span == 0) return static_cast<std::int64_t>(r);
      if (r < limit || limit == 0) return lo + static_cast<std::int64_t>(r % span);
    }
  }

  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1));
  }

 private:
  std::uint64_t state_;
};

// Default seed for all randomized checks; every CLI command accepting --seed
// documents this value.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace diagmaps

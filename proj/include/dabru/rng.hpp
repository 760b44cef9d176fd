#pragma once

#include <cstdint>

namespace dabru {

// Counter-based splittable generator (splitmix64 over a keyed counter), so
// instance k of a seeded campaign is reproducible independently of scheduling.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t instance)
      : state_(seed * 0x9e3779b97f4a7c15ULL + instance * 0xbf58476d1ce4e5b9ULL) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  int next_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace dabru

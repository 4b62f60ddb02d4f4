#pragma once

#include <cstdint>

namespace hopfmod {

// splitmix64: tiny deterministic generator. Every randomized search in the
// library takes an explicit seed so runs are reproducible bit-for-bit across
// platforms (std:: distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Modulo bias is irrelevant at our bounds (< 2^32).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace hopfmod

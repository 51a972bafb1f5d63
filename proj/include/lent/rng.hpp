#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace lent {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because the
// whole sequence is pinned down by a dozen lines of integer arithmetic, so a
// reimplementation in any language reproduces every sampled distribution
// bit-for-bit from the seed alone. The derived samplers below are part of the
// same contract and must not be changed without a format bump:
//
//   uniform01:   (next() >> 11) * 2^-53, in [0, 1)
//   exponential: -log(1 - uniform01())
//   dirichlet:   n exponentials, normalized (flat Dirichlet(1,...,1))
//   index(n):    floor(uniform01() * n), clamped to n-1
//   sub_seed(i): the (i+1)-th raw output of a SplitMix64 seeded with the
//                master seed (used to give each sampled object its own stream)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double exponential() { return -std::log(1.0 - uniform01()); }

  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i >= n ? n - 1 : i;
  }

  std::vector<double> dirichlet(std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (auto& x : v) {
      x = exponential();
      sum += x;
    }
    for (auto& x : v) x /= sum;
    return v;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master);
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= index; ++i) s = g.next();
  return s;
}

}  // namespace lent

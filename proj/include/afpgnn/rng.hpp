#pragma once

#include <cstdint>
#include <vector>

namespace afpgnn {

// SplitMix64 (Steele/Lea/Flood, "Fast splittable pseudorandom number
// generators"). Chosen because the whole stream is a pure function of the
// 64-bit seed with no platform-dependent state, so every run is
// bit-reproducible everywhere, and because the additive state gives O(1)
// jump-ahead/random access into the stream (peek_at), which the sparse
// training path uses to evaluate dropout draws only at stored entries while
// staying draw-for-draw identical to the dense sequential path.
struct Rng {
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  std::uint64_t state = 0;

  Rng() = default;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state += kGamma;
    return mix(state);
  }

  // Value the stream would produce as its (n+1)-th next() from here,
  // without advancing.
  std::uint64_t peek_at(std::uint64_t n) const {
    return mix(state + (n + 1) * kGamma);
  }

  void skip(std::uint64_t n) { state += n * kGamma; }

  // 53-bit mantissa uniform in [0, 1).
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }

  static double to_double(std::uint64_t r) {
    return double(r >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Unbiased integer in [0, n) via masked rejection; draw count varies but is
  // itself a deterministic function of the stream.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll(n - 1 | 1);
    for (;;) {
      std::uint64_t r = next() & mask;
      if (r < n) return r;
    }
  }

  // Independent stream derived from this one's seed and a salt; does not
  // advance this stream.
  Rng split(std::uint64_t salt) const {
    return Rng(mix(state + salt * kGamma + 0x632BE59BD9B4E019ULL));
  }

  // Fisher-Yates; consumes a deterministic (stream-dependent) number of draws.
  std::vector<std::uint32_t> permutation(std::size_t n) {
    std::vector<std::uint32_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = std::uint32_t(i);
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = std::size_t(next_below(i));
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }
};

}  // namespace afpgnn

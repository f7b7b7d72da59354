#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace syllobench {

namespace detail {

inline constexpr std::uint64_t fnv1a64(std::string_view s,
                                       std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Derives an independent stream seed from a base seed and up to two string
/// keys (model id, subject id). Stable across platforms, unlike std::hash.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view key1,
                                        std::string_view key2 = {}) {
  std::uint64_t h = detail::splitmix64(seed);
  h = detail::splitmix64(h ^ detail::fnv1a64(key1));
  if (!key2.empty()) h = detail::splitmix64(h ^ detail::fnv1a64(key2));
  return h;
}

/// Seeded random stream. Draws are hand-rolled on top of mt19937_64 because
/// the std distributions are implementation-defined and the output files must
/// be byte-identical for a given seed.
class RandomStream {
public:
  RandomStream() : engine_(0) {}
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  void reseed(std::uint64_t seed) { engine_.seed(seed); }

  /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

}  // namespace syllobench

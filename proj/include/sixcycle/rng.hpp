#pragma once

#include <cstdint>
#include <limits>

namespace sixcycle {

/// SplitMix64. Cheap to seed, which matters because color coding reseeds once
/// per round. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    for (;;) {
      unsigned __int128 prod = static_cast<unsigned __int128>((*this)()) * bound;
      auto low = static_cast<std::uint64_t>(prod);
      if (low >= bound || low >= (0 - bound) % bound) {
        return static_cast<std::uint64_t>(prod >> 64);
      }
    }
  }

 private:
  std::uint64_t state_;
};

/// Injective in `index` for a fixed `seed`; used to derive per-round and
/// per-probe seeds that can be replayed individually.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed ^ (index * 0xd1b54a32d192ed03ull))();
}

}  // namespace sixcycle

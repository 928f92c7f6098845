#pragma once

#include <cstdint>
#include <limits>

namespace capt {

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives the key of an independent substream from a parent seed and a
/// stream id (entry index, trial number, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed) ^ mix64(stream ^ 0xD1B54A32D192ED03ULL));
}

/// Counter-based generator: draw n is mix64(key + n * golden gamma). Output
/// depends only on (key, counter), so streams are reproducible across
/// platforms and compilers. All distributions below are defined here rather
/// than through <random>, whose distributions are implementation-defined.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept : key_(derive_seed(seed, stream)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    return mix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  constexpr double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n); n must be > 0. Lemire's nearly-divisionless
  /// method with rejection, so the result is exactly uniform.
  std::uint64_t below(std::uint64_t n) noexcept {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>((*this)()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<u128>((*this)()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  constexpr bool bernoulli(double p) noexcept { return uniform01() < p; }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace capt

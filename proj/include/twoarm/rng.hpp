#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "twoarm/specfun.hpp"

namespace twoarm {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Vigna / Steele et al.).
constexpr std::uint64_t avalanche(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Deterministic random engine. The algorithm is part of the library
/// contract so that seeded runs reproduce bit-for-bit on every platform:
/// the 256-bit state is filled from the seed by a splitmix64 stream and
/// advanced with xoshiro256++. Uniform doubles are ((u64 >> 11) + 0.5) *
/// 2^-53, strictly inside (0, 1); normals come from the inverse CDF.
///
/// A state is single-owner: concurrent simulations must derive one seed
/// per task (see derive_seed), never share a state.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
      s += detail::kGolden;
      word = detail::avalanche(s);
    }
  }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept {
    auto& s = state_;
    const std::uint64_t out = detail::rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = detail::rotl(s[3], 45);
    return out;
  }

  /// Uniform draw strictly inside (0, 1).
  double next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw (inverse-CDF transform; one uniform per draw).
  double next_normal() { return normal_quantile(next_uniform()); }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

/// Deterministic seed derivation for independent substreams. Hashing the
/// master seed with each path word in order gives reproducible,
/// order-insensitive-to-scheduling (but path-sensitive) seeds, e.g.
/// derive_seed(master, {n, replication}) in the power study.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::span<const std::uint64_t> path) {
  std::uint64_t s = detail::avalanche(master + detail::kGolden);
  for (const std::uint64_t word : path) {
    s = detail::avalanche(s ^ (word + detail::kGolden));
  }
  return s;
}

inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  return derive_seed(
      master, std::span<const std::uint64_t>(path.begin(), path.size()));
}

}  // namespace twoarm

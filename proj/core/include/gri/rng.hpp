// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace gri {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Counter-based stream: the k-th output is mix64(key + (k + 1) * gamma), which is
// exactly the k-th output of a SplitMix64 generator seeded with `key`. Any draw can be
// addressed directly, so replicates never depend on evaluation order.
class CounterStream {
 public:
  constexpr explicit CounterStream(std::uint64_t key) noexcept : key_(key) {}

  // Independent child stream for (this stream, index).
  [[nodiscard]] constexpr CounterStream split(std::uint64_t index) const noexcept {
    return CounterStream(mix64(key_ ^ mix64(index + kGoldenGamma)));
  }

  [[nodiscard]] constexpr std::uint64_t bits(std::uint64_t k) const noexcept {
    return mix64(key_ + (k + 1) * kGoldenGamma);
  }

  // Uniform on the open interval (0, 1): ((bits >> 11) + 0.5) * 2^-53.
  [[nodiscard]] constexpr double uniform(std::uint64_t k) const noexcept {
    return (static_cast<double>(bits(k) >> 11) + 0.5) * 0x1.0p-53;
  }

  [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

// Root stream for a user-facing seed; seeds are scrambled once so nearby integers
// give unrelated keys.
[[nodiscard]] constexpr CounterStream seed_stream(std::uint64_t seed) noexcept {
  return CounterStream(mix64(seed));
}

// Stream for replicate `index` of an experiment with the given master seed.
[[nodiscard]] constexpr CounterStream replicate_stream(std::uint64_t master_seed,
                                                       std::uint64_t index) noexcept {
  return seed_stream(master_seed).split(index);
}

}  // namespace gri

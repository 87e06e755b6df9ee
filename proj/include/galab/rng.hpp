#pragma once

#include <cstdint>
#include <random>

namespace galab {

// 64-bit finalizer (splitmix64). Bijective, full avalanche.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Top 53 bits -> [0,1).
constexpr double u01_from_bits(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Keyed hash of a word sequence. The exact construction is part of the
// on-disk reproducibility contract: landscapes seeded through it must give
// identical fitness values on every platform.
class Hash64 {
 public:
  explicit Hash64(std::uint64_t seed) : state_(mix64(seed ^ 0x6a09e667f3bcc908ULL)) {}

  Hash64& absorb(std::uint64_t word) {
    state_ = hash_combine(state_, word);
    return *this;
  }

  std::uint64_t digest() const { return mix64(state_); }
  double digest_u01() const { return u01_from_bits(digest()); }

 private:
  std::uint64_t state_;
};

// Seeded random source. Wraps mt19937_64 (whose raw output the standard pins
// down exactly) and derives every distribution by hand so that identical
// seeds give identical streams on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1).
  double uniform01() { return u01_from_bits(next_u64()); }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint8_t bit() { return static_cast<std::uint8_t>(next_u64() >> 63); }

  // Uniform in [0,n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace galab

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "galab/genome.hpp"
#include "galab/rng.hpp"

namespace galab {

// Sum of bits; the separable reference problem.
class OneMax {
 public:
  double operator()(const FlatGenome& g) const {
    std::size_t ones = 0;
    for (std::uint8_t b : g.bits) ones += b ? 1 : 0;
    return static_cast<double>(ones);
  }
};

// A controller section fixes how many target bits count. The controller is
// itself an extended gene: its decoded fraction, scaled to the target width
// and rounded half-up, gives the number r of relevant target bits; fitness
// is the number of ones among the first r.
class SecondOrder {
 public:
  SecondOrder(std::size_t controller_width, std::size_t target_width);

  std::size_t relevant_bits(const FlatGenome& g) const;
  double operator()(const FlatGenome& g) const;

  std::size_t controller_width() const { return controller_width_; }
  std::size_t target_width() const { return target_width_; }

 private:
  std::size_t controller_width_;
  std::size_t target_width_;
};

// Tunable-epistasis landscape: each locus contributes a seeded-random table
// value indexed by itself and its K circular right-neighbors; fitness is the
// per-locus mean. K = 0 is separable, large K is rugged. Contributions are
// defined by a keyed hash so any K is admissible; small tables are cached.
class RuggedNk {
 public:
  RuggedNk(std::size_t length, unsigned k, std::uint64_t seed);

  // Table value for locus i under neighborhood `pattern` (bit d of the
  // pattern, counting from the most significant of k+1, is the locus at
  // circular offset d).
  double contribution(std::size_t locus, std::uint64_t pattern) const;
  double operator()(const FlatGenome& g) const;

  std::size_t length() const { return length_; }
  unsigned k() const { return k_; }

 private:
  double hashed_entry(std::size_t locus, std::uint64_t pattern) const;

  std::size_t length_;
  unsigned k_;
  std::uint64_t seed_;
  std::vector<double> table_;  // cache; empty when 2^(K+1) tables are too big
};

// Zero-correlation baseline: a keyed hash of the whole bit vector, uniform
// in [0,1). Any single-bit flip lands on an unrelated value.
class RandomTable {
 public:
  explicit RandomTable(std::uint64_t seed) : seed_(seed) {}

  double operator()(const FlatGenome& g) const;

 private:
  std::uint64_t seed_;
};

// Position-independent landscape over signal-structured genomes: sum over
// expressed genes of weight[id] * decoded payload. Absent genes contribute 0.
class SegmentedSum {
 public:
  SegmentedSum(std::vector<double> weights, unsigned id_width);

  double operator()(const SegmentedGenome& g) const;

  unsigned id_width() const { return id_width_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  unsigned id_width_;
};

// Runtime dispatch over the flat-genome landscapes, for config-driven code.
class FlatLandscape {
 public:
  using Variant = std::variant<OneMax, SecondOrder, RuggedNk, RandomTable>;

  FlatLandscape(Variant v) : v_(std::move(v)) {}

  double operator()(const FlatGenome& g) const {
    return std::visit([&](const auto& land) { return land(g); }, v_);
  }

  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

}  // namespace galab

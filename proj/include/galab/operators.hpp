#pragma once

#include <cstddef>

#include "galab/genome.hpp"
#include "galab/rng.hpp"

namespace galab {

enum class CrossoverKind {
  OnePointFlat,
  UniformFlat,
  OnePointStream,
  SegmentAligned,
};

// Variation rates. p_m flips a bit/symbol, p_sig moves a symbol into or out
// of SIG (segmented genomes only); the two are exclusive events per symbol,
// hence p_m + p_sig <= 1. Macro-operator rates apply once per offspring.
struct OperatorConfig {
  double p_m = 0.0;
  double p_sig = 0.0;
  CrossoverKind crossover = CrossoverKind::OnePointFlat;
  double p_inversion = 0.0;
  double p_translocation = 0.0;
  double p_duplication = 0.0;

  void validate() const;  // throws std::invalid_argument
};

FlatGenome point_mutate(const FlatGenome& genome, const OperatorConfig& cfg, Rng& rng);
SegmentedGenome point_mutate(const SegmentedGenome& genome, const OperatorConfig& cfg, Rng& rng);

// One offspring per mating. Identical parents reproduce exactly, every kind.
FlatGenome crossover(const FlatGenome& a, const FlatGenome& b, const OperatorConfig& cfg,
                     Rng& rng);
SegmentedGenome crossover(const SegmentedGenome& a, const SegmentedGenome& b,
                          const OperatorConfig& cfg, unsigned id_width, Rng& rng);

// Deterministic cores, exposed for exact test vectors.
FlatGenome one_point_cross_at(const FlatGenome& a, const FlatGenome& b, std::size_t cut);
SegmentedGenome stream_cross_at(const SegmentedGenome& a, const SegmentedGenome& b,
                                std::size_t cut_a, std::size_t cut_b);

// Macro-operators act on whole segments so gene semantics survive the move.
// Non-coding junk between segments travels with the segment it follows; the
// non-coding prefix never moves. Genomes with too few segments pass through
// unchanged.
SegmentedGenome inversion(const SegmentedGenome& genome, unsigned id_width, Rng& rng);
SegmentedGenome translocation(const SegmentedGenome& genome, unsigned id_width, Rng& rng);
SegmentedGenome duplication(const SegmentedGenome& genome, unsigned id_width, Rng& rng);

// Deterministic cores. Indices refer to parsed segment order; `first`/`last`
// bound an inclusive run, `dest` is a boundary in the remaining list.
SegmentedGenome invert_run(const SegmentedGenome& genome, unsigned id_width, std::size_t first,
                           std::size_t last);
SegmentedGenome translocate_run(const SegmentedGenome& genome, unsigned id_width,
                                std::size_t first, std::size_t last, std::size_t dest);
SegmentedGenome duplicate_segment(const SegmentedGenome& genome, unsigned id_width,
                                  std::size_t index, std::size_t dest);

}  // namespace galab

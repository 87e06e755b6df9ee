#include "galab/operators.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>

namespace galab {

namespace {

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

// Stream decomposition backing the macro-operators: a non-coding prefix
// followed by one chunk per segment. A chunk runs from its opening SIG to
// the next segment's SIG (or the stream end), so junk produced by abandoned
// headers travels with the segment it follows and re-parses identically.
struct Chunks {
  std::size_t prefix_end = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end) per segment
};

Chunks decompose(const SegmentedGenome& genome, const GeneMap& map) {
  Chunks out;
  const auto& segs = map.segments();
  if (segs.empty()) {
    out.prefix_end = genome.size();
    return out;
  }
  out.prefix_end = segs.front().begin;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::size_t begin = segs[i].begin;
    const std::size_t end = i + 1 < segs.size() ? segs[i + 1].begin : genome.size();
    out.spans.emplace_back(begin, end);
  }
  return out;
}

SegmentedGenome reassemble(const SegmentedGenome& genome, const Chunks& chunks,
                           std::span<const std::size_t> order) {
  SegmentedGenome out;
  out.stream.reserve(genome.size());
  out.stream.insert(out.stream.end(), genome.stream.begin(),
                    genome.stream.begin() + static_cast<std::ptrdiff_t>(chunks.prefix_end));
  for (std::size_t idx : order) {
    const auto [begin, end] = chunks.spans[idx];
    out.stream.insert(out.stream.end(), genome.stream.begin() + static_cast<std::ptrdiff_t>(begin),
                      genome.stream.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

// Decodes a uniform draw over all runs [first, last] with last >= first + min_len - 1.
std::pair<std::size_t, std::size_t> pick_run(std::size_t count, std::size_t min_len, Rng& rng) {
  std::size_t total = 0;
  for (std::size_t first = 0; first + min_len <= count; ++first) total += count - first - min_len + 1;
  std::size_t t = rng.index(total);
  for (std::size_t first = 0;; ++first) {
    const std::size_t runs_here = count - first - min_len + 1;
    if (t < runs_here) return {first, first + min_len - 1 + t};
    t -= runs_here;
  }
}

}  // namespace

void OperatorConfig::validate() const {
  if (!in_unit(p_m)) throw std::invalid_argument("operators.p_m must be in [0,1]");
  if (!in_unit(p_sig)) throw std::invalid_argument("operators.p_sig must be in [0,1]");
  if (p_m + p_sig > 1.0)
    throw std::invalid_argument("operators.p_m + operators.p_sig must not exceed 1");
  if (!in_unit(p_inversion)) throw std::invalid_argument("operators.p_inversion must be in [0,1]");
  if (!in_unit(p_translocation))
    throw std::invalid_argument("operators.p_translocation must be in [0,1]");
  if (!in_unit(p_duplication))
    throw std::invalid_argument("operators.p_duplication must be in [0,1]");
}

FlatGenome point_mutate(const FlatGenome& genome, const OperatorConfig& cfg, Rng& rng) {
  FlatGenome out = genome;
  for (auto& bit : out.bits) {
    if (rng.bernoulli(cfg.p_m)) bit ^= 1;
  }
  return out;
}

SegmentedGenome point_mutate(const SegmentedGenome& genome, const OperatorConfig& cfg, Rng& rng) {
  SegmentedGenome out = genome;
  for (auto& sym : out.stream) {
    if (sym == Symbol::Sig) {
      if (rng.bernoulli(cfg.p_sig)) sym = rng.bit() ? Symbol::One : Symbol::Zero;
    } else {
      const double u = rng.uniform01();
      if (u < cfg.p_m) {
        sym = sym == Symbol::One ? Symbol::Zero : Symbol::One;
      } else if (u < cfg.p_m + cfg.p_sig) {
        sym = Symbol::Sig;
      }
    }
  }
  return out;
}

FlatGenome one_point_cross_at(const FlatGenome& a, const FlatGenome& b, std::size_t cut) {
  FlatGenome out;
  out.bits.assign(a.bits.begin(), a.bits.begin() + static_cast<std::ptrdiff_t>(cut));
  out.bits.insert(out.bits.end(), b.bits.begin() + static_cast<std::ptrdiff_t>(cut),
                  b.bits.end());
  return out;
}

SegmentedGenome stream_cross_at(const SegmentedGenome& a, const SegmentedGenome& b,
                                std::size_t cut_a, std::size_t cut_b) {
  SegmentedGenome out;
  out.stream.assign(a.stream.begin(), a.stream.begin() + static_cast<std::ptrdiff_t>(cut_a));
  out.stream.insert(out.stream.end(), b.stream.begin() + static_cast<std::ptrdiff_t>(cut_b),
                    b.stream.end());
  return out;
}

FlatGenome crossover(const FlatGenome& a, const FlatGenome& b, const OperatorConfig& cfg,
                     Rng& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: genome lengths differ");
  if (a == b) return a;
  switch (cfg.crossover) {
    case CrossoverKind::OnePointFlat: {
      const std::size_t len = a.size();
      if (len < 2) return a;
      const std::size_t cut = 1 + rng.index(len - 1);
      return one_point_cross_at(a, b, cut);
    }
    case CrossoverKind::UniformFlat: {
      FlatGenome out;
      out.bits.resize(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out.bits[i] = rng.bit() ? b.bits[i] : a.bits[i];
      return out;
    }
    default:
      throw std::invalid_argument("crossover: kind requires segmented genomes");
  }
}

namespace {

// Cut positions that never split a segment: each segment's opening SIG plus
// the stream end; {0, end} when nothing parses.
std::vector<std::size_t> aligned_boundaries(const SegmentedGenome& genome, unsigned id_width) {
  const GeneMap map = parse(genome, id_width);
  std::vector<std::size_t> bounds;
  if (map.segments().empty()) {
    bounds.push_back(0);
  } else {
    for (const ParsedSegment& ps : map.segments()) bounds.push_back(ps.begin);
  }
  bounds.push_back(genome.size());
  return bounds;
}

}  // namespace

SegmentedGenome crossover(const SegmentedGenome& a, const SegmentedGenome& b,
                          const OperatorConfig& cfg, unsigned id_width, Rng& rng) {
  if (a == b) return a;
  switch (cfg.crossover) {
    case CrossoverKind::OnePointStream: {
      const std::size_t cut_a = rng.index(a.size() + 1);
      const std::size_t cut_b = rng.index(b.size() + 1);
      return stream_cross_at(a, b, cut_a, cut_b);
    }
    case CrossoverKind::SegmentAligned: {
      const auto bounds_a = aligned_boundaries(a, id_width);
      const auto bounds_b = aligned_boundaries(b, id_width);
      const std::size_t cut_a = bounds_a[rng.index(bounds_a.size())];
      const std::size_t cut_b = bounds_b[rng.index(bounds_b.size())];
      return stream_cross_at(a, b, cut_a, cut_b);
    }
    default:
      throw std::invalid_argument("crossover: kind requires flat genomes");
  }
}

SegmentedGenome invert_run(const SegmentedGenome& genome, unsigned id_width, std::size_t first,
                           std::size_t last) {
  const GeneMap map = parse(genome, id_width);
  const std::size_t count = map.segment_count();
  if (count < 2 || first >= last || last >= count) return genome;
  const Chunks chunks = decompose(genome, map);
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::reverse(order.begin() + static_cast<std::ptrdiff_t>(first),
               order.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return reassemble(genome, chunks, order);
}

SegmentedGenome translocate_run(const SegmentedGenome& genome, unsigned id_width,
                                std::size_t first, std::size_t last, std::size_t dest) {
  const GeneMap map = parse(genome, id_width);
  const std::size_t count = map.segment_count();
  if (count < 2 || first > last || last >= count) return genome;
  const Chunks chunks = decompose(genome, map);
  std::vector<std::size_t> run;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < count; ++i) {
    (i >= first && i <= last ? run : rest).push_back(i);
  }
  if (dest > rest.size()) return genome;
  std::vector<std::size_t> order(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(dest));
  order.insert(order.end(), run.begin(), run.end());
  order.insert(order.end(), rest.begin() + static_cast<std::ptrdiff_t>(dest), rest.end());
  return reassemble(genome, chunks, order);
}

SegmentedGenome duplicate_segment(const SegmentedGenome& genome, unsigned id_width,
                                  std::size_t index, std::size_t dest) {
  const GeneMap map = parse(genome, id_width);
  const std::size_t count = map.segment_count();
  if (count < 1 || index >= count || dest <= index || dest > count) return genome;
  const Chunks chunks = decompose(genome, map);
  // The copy is a clean SIG + header + payload, junk-free.
  const SegmentedGenome copy =
      serialize(std::span(&map.segments()[index].segment, 1), id_width);
  const std::size_t insert_at =
      dest == count ? genome.size() : chunks.spans[dest].first;
  SegmentedGenome out;
  out.stream.reserve(genome.size() + copy.size());
  out.stream.assign(genome.stream.begin(),
                    genome.stream.begin() + static_cast<std::ptrdiff_t>(insert_at));
  out.stream.insert(out.stream.end(), copy.stream.begin(), copy.stream.end());
  out.stream.insert(out.stream.end(),
                    genome.stream.begin() + static_cast<std::ptrdiff_t>(insert_at),
                    genome.stream.end());
  return out;
}

SegmentedGenome inversion(const SegmentedGenome& genome, unsigned id_width, Rng& rng) {
  const std::size_t count = parse(genome, id_width).segment_count();
  if (count < 2) return genome;
  const auto [first, last] = pick_run(count, 2, rng);
  return invert_run(genome, id_width, first, last);
}

SegmentedGenome translocation(const SegmentedGenome& genome, unsigned id_width, Rng& rng) {
  const std::size_t count = parse(genome, id_width).segment_count();
  if (count < 2) return genome;
  const auto [first, last] = pick_run(count, 1, rng);
  const std::size_t remaining = count - (last - first + 1);
  const std::size_t dest = rng.index(remaining + 1);
  return translocate_run(genome, id_width, first, last, dest);
}

SegmentedGenome duplication(const SegmentedGenome& genome, unsigned id_width, Rng& rng) {
  const std::size_t count = parse(genome, id_width).segment_count();
  if (count < 1) return genome;
  const std::size_t index = rng.index(count);
  const std::size_t dest = index + 1 + rng.index(count - index);
  return duplicate_segment(genome, id_width, index, dest);
}

}  // namespace galab

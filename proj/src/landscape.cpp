#include "galab/landscape.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace galab {

SecondOrder::SecondOrder(std::size_t controller_width, std::size_t target_width)
    : controller_width_(controller_width), target_width_(target_width) {
  if (controller_width_ < 1) throw std::invalid_argument("second_order: controller width >= 1");
  if (target_width_ < 1) throw std::invalid_argument("second_order: target width >= 1");
}

std::size_t SecondOrder::relevant_bits(const FlatGenome& g) const {
  if (g.size() != controller_width_ + target_width_)
    throw std::invalid_argument("second_order: genome length must be controller + target width");
  const auto controller = std::span(g.bits).first(controller_width_);
  const double fraction = decode_extended(controller).value;
  // round half-up
  return static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(target_width_) + 0.5));
}

double SecondOrder::operator()(const FlatGenome& g) const {
  const std::size_t r = relevant_bits(g);
  std::size_t ones = 0;
  for (std::size_t i = 0; i < r; ++i) ones += g.bits[controller_width_ + i] ? 1 : 0;
  return static_cast<double>(ones);
}

namespace {

// Cached tables are worthwhile only while they stay small.
constexpr std::uint64_t kMaxCachedEntries = 1ull << 22;

}  // namespace

RuggedNk::RuggedNk(std::size_t length, unsigned k, std::uint64_t seed)
    : length_(length), k_(k), seed_(seed) {
  if (length_ < 1) throw std::invalid_argument("rugged_nk: length must be >= 1");
  if (k_ > length_ - 1) throw std::invalid_argument("rugged_nk: K must be in [0, L-1]");
  if (k_ + 1 < 64) {
    const std::uint64_t patterns = 1ull << (k_ + 1);
    if (patterns <= kMaxCachedEntries && length_ <= kMaxCachedEntries / patterns) {
      table_.resize(length_ * patterns);
      for (std::size_t i = 0; i < length_; ++i) {
        for (std::uint64_t p = 0; p < patterns; ++p) {
          table_[i * patterns + p] = hashed_entry(i, p);
        }
      }
    }
  }
}

double RuggedNk::hashed_entry(std::size_t locus, std::uint64_t pattern) const {
  return Hash64(seed_).absorb(locus).absorb(pattern).digest_u01();
}

double RuggedNk::contribution(std::size_t locus, std::uint64_t pattern) const {
  if (!table_.empty()) return table_[locus * (1ull << (k_ + 1)) + pattern];
  return hashed_entry(locus, pattern);
}

double RuggedNk::operator()(const FlatGenome& g) const {
  if (g.size() != length_) throw std::invalid_argument("rugged_nk: genome length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < length_; ++i) {
    std::uint64_t pattern = 0;
    for (unsigned d = 0; d <= k_; ++d) {
      pattern = (pattern << 1) | (g.bits[(i + d) % length_] ? 1u : 0u);
    }
    sum += contribution(i, pattern);
  }
  return sum / static_cast<double>(length_);
}

double RandomTable::operator()(const FlatGenome& g) const {
  Hash64 h(seed_);
  h.absorb(g.size());
  std::uint64_t word = 0;
  unsigned filled = 0;
  for (std::uint8_t b : g.bits) {
    word = (word << 1) | (b ? 1u : 0u);
    if (++filled == 64) {
      h.absorb(word);
      word = 0;
      filled = 0;
    }
  }
  if (filled > 0) h.absorb(word);
  return h.digest_u01();
}

SegmentedSum::SegmentedSum(std::vector<double> weights, unsigned id_width)
    : weights_(std::move(weights)), id_width_(id_width) {
  if (id_width_ < 1 || id_width_ > 20)
    throw std::invalid_argument("segmented_sum: id_width must be in [1,20]");
  if (weights_.size() != (1ull << id_width_))
    throw std::invalid_argument("segmented_sum: need one weight per gene id (2^id_width)");
}

double SegmentedSum::operator()(const SegmentedGenome& g) const {
  const GeneMap map = parse(g, id_width_);
  // Summation in gene-id order, so fitness does not depend on where the
  // segments sit in the stream, down to the last bit.
  std::map<std::uint32_t, const std::vector<std::uint8_t>*> expressed;
  for (const Segment* seg : map.entries()) expressed.emplace(seg->gene_id, &seg->payload);
  double sum = 0.0;
  for (const auto& [id, payload] : expressed) {
    sum += weights_[id] * decode_extended(*payload).value;
  }
  return sum;
}

}  // namespace galab

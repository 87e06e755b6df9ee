#include "galab/genome.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace galab {

GeneMap::GeneMap(std::vector<ParsedSegment> segments) : segments_(std::move(segments)) {}

const std::vector<std::uint8_t>* GeneMap::find(std::uint32_t gene_id) const {
  for (const ParsedSegment& ps : segments_) {
    if (!ps.shadowed && ps.segment.gene_id == gene_id) return &ps.segment.payload;
  }
  return nullptr;
}

std::vector<const Segment*> GeneMap::entries() const {
  std::vector<const Segment*> out;
  for (const ParsedSegment& ps : segments_) {
    if (!ps.shadowed) out.push_back(&ps.segment);
  }
  return out;
}

std::size_t GeneMap::entry_count() const {
  std::size_t n = 0;
  for (const ParsedSegment& ps : segments_) n += ps.shadowed ? 0 : 1;
  return n;
}

std::vector<std::pair<std::uint32_t, std::vector<std::uint8_t>>> GeneMap::entry_pairs() const {
  std::vector<std::pair<std::uint32_t, std::vector<std::uint8_t>>> out;
  for (const Segment* s : entries()) out.emplace_back(s->gene_id, s->payload);
  return out;
}

GeneMap parse(const SegmentedGenome& genome, unsigned id_width) {
  if (id_width < 1 || id_width > 20)
    throw std::invalid_argument("parse: id_width must be in [1,20]");
  const auto& s = genome.stream;
  const std::size_t n = s.size();
  std::vector<ParsedSegment> segments;
  std::unordered_set<std::uint32_t> seen;

  std::size_t i = 0;
  while (i < n) {
    if (s[i] != Symbol::Sig) {
      ++i;  // non-coding
      continue;
    }
    // Header: id_width symbols, big-endian. A SIG restarts, truncation ends.
    std::uint32_t id = 0;
    std::size_t j = i + 1;
    bool restart = false;
    for (; j < i + 1 + id_width; ++j) {
      if (j >= n) return GeneMap(std::move(segments));
      if (s[j] == Symbol::Sig) {
        i = j;
        restart = true;
        break;
      }
      id = (id << 1) | (s[j] == Symbol::One ? 1u : 0u);
    }
    if (restart) continue;
    // Payload runs to the next SIG or the end.
    std::size_t k = j;
    ParsedSegment ps;
    ps.begin = i;
    ps.segment.gene_id = id;
    while (k < n && s[k] != Symbol::Sig) {
      ps.segment.payload.push_back(s[k] == Symbol::One ? 1 : 0);
      ++k;
    }
    ps.end = k;
    ps.shadowed = !seen.insert(id).second;
    segments.push_back(std::move(ps));
    i = k;
  }
  return GeneMap(std::move(segments));
}

SegmentedGenome serialize(std::span<const Segment> segments, unsigned id_width) {
  if (id_width < 1 || id_width > 20)
    throw std::invalid_argument("serialize: id_width must be in [1,20]");
  {
    const std::uint32_t limit = 1u << id_width;
    for (const Segment& seg : segments) {
      if (seg.gene_id >= limit)
        throw std::invalid_argument("serialize: gene_id does not fit in id_width symbols");
    }
  }
  SegmentedGenome out;
  for (const Segment& seg : segments) {
    out.stream.push_back(Symbol::Sig);
    for (unsigned b = id_width; b-- > 0;) {
      out.stream.push_back((seg.gene_id >> b) & 1u ? Symbol::One : Symbol::Zero);
    }
    for (std::uint8_t bit : seg.payload) {
      if (bit > 1) throw std::invalid_argument("serialize: payload values must be 0 or 1");
      out.stream.push_back(bit ? Symbol::One : Symbol::Zero);
    }
  }
  return out;
}

ExtendedValue decode_extended(std::span<const std::uint8_t> payload) {
  if (payload.empty()) return {0.0, true};
  std::size_t ones = 0;
  for (std::uint8_t b : payload) ones += b ? 1 : 0;
  return {static_cast<double>(ones) / static_cast<double>(payload.size()), false};
}

std::size_t hamming(const FlatGenome& a, const FlatGenome& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming: genome lengths differ");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.bits[i] != b.bits[i] ? 1 : 0;
  return d;
}

namespace {

void check_equal_lengths(std::span<const FlatGenome> population) {
  for (const FlatGenome& g : population) {
    if (g.size() != population.front().size())
      throw std::invalid_argument("population genome lengths differ");
  }
}

}  // namespace

double diversity(std::span<const FlatGenome> population) {
  const std::size_t n = population.size();
  if (n < 2) throw std::invalid_argument("diversity: need at least 2 individuals");
  check_equal_lengths(population);
  const std::size_t len = population.front().size();
  // Sum over pairs equals sum over loci of ones*(n-ones); integer-exact.
  std::uint64_t total = 0;
  for (std::size_t l = 0; l < len; ++l) {
    std::uint64_t ones = 0;
    for (const FlatGenome& g : population) ones += g.bits[l] ? 1 : 0;
    total += ones * (n - ones);
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return static_cast<double>(total) / static_cast<double>(pairs);
}

std::size_t count_fixed_zero_loci(std::span<const FlatGenome> population) {
  if (population.empty()) return 0;
  check_equal_lengths(population);
  const std::size_t len = population.front().size();
  std::size_t count = 0;
  for (std::size_t l = 0; l < len; ++l) {
    bool all_zero = true;
    for (const FlatGenome& g : population) {
      if (g.bits[l]) {
        all_zero = false;
        break;
      }
    }
    count += all_zero ? 1 : 0;
  }
  return count;
}

std::string to_text(const FlatGenome& genome) {
  std::string out;
  out.reserve(genome.size());
  for (std::uint8_t b : genome.bits) out.push_back(b ? '1' : '0');
  return out;
}

std::string to_text(const SegmentedGenome& genome) {
  std::string out;
  out.reserve(genome.size());
  for (Symbol s : genome.stream) {
    switch (s) {
      case Symbol::Zero: out.push_back('0'); break;
      case Symbol::One: out.push_back('1'); break;
      case Symbol::Sig: out.push_back('S'); break;
    }
  }
  return out;
}

FlatGenome flat_from_text(std::string_view text) {
  FlatGenome g;
  for (char c : text) {
    if (c == '0')
      g.bits.push_back(0);
    else if (c == '1')
      g.bits.push_back(1);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("flat genome literal: expected '0' or '1'");
  }
  return g;
}

SegmentedGenome segmented_from_text(std::string_view text) {
  SegmentedGenome g;
  for (char c : text) {
    if (c == '0')
      g.stream.push_back(Symbol::Zero);
    else if (c == '1')
      g.stream.push_back(Symbol::One);
    else if (c == 'S' || c == 's')
      g.stream.push_back(Symbol::Sig);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("segmented genome literal: expected '0', '1' or 'S'");
  }
  return g;
}

}  // namespace galab

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galab {

// Classical individual: fixed-length bit vector.
struct FlatGenome {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  bool operator==(const FlatGenome&) const = default;
};

// Symbol of a signal-structured genome.
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Sig = 2 };

// Signal-structured individual: any symbol sequence is valid; regions the
// parser cannot read are non-coding.
struct SegmentedGenome {
  std::vector<Symbol> stream;

  std::size_t size() const { return stream.size(); }
  bool operator==(const SegmentedGenome&) const = default;
};

// One gene as carried by the stream: id header plus payload bits.
struct Segment {
  std::uint32_t gene_id = 0;
  std::vector<std::uint8_t> payload;

  bool operator==(const Segment&) const = default;
};

// A parsed segment with its location in the stream. `begin` is the index of
// the opening SIG, `end` is one past the payload. `shadowed` marks later
// copies of an id already seen; they stay in the genome but do not express.
struct ParsedSegment {
  Segment segment;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool shadowed = false;
};

// Parsed view of a SegmentedGenome. Expression follows stream order with
// first-occurrence-wins per gene id.
class GeneMap {
 public:
  GeneMap() = default;
  explicit GeneMap(std::vector<ParsedSegment> segments);

  const std::vector<ParsedSegment>& segments() const { return segments_; }
  std::size_t segment_count() const { return segments_.size(); }

  // First-occurrence payload, or nullptr if the id never appears.
  const std::vector<std::uint8_t>* find(std::uint32_t gene_id) const;

  // Expressed (non-shadowed) segments in stream order.
  std::vector<const Segment*> entries() const;
  std::size_t entry_count() const;

  // Expressed view as (id, payload) pairs, for equality checks in tests.
  std::vector<std::pair<std::uint32_t, std::vector<std::uint8_t>>> entry_pairs() const;

 private:
  std::vector<ParsedSegment> segments_;
};

// Scans the stream left to right. A SIG opens a header of the next
// `id_width` symbols read as a big-endian id; a SIG inside the header
// abandons it and parsing restarts at that SIG; a header cut off by the end
// of the stream is non-coding. The payload runs to the next SIG or the end.
// Total over streams; id_width must be in [1,20].
GeneMap parse(const SegmentedGenome& genome, unsigned id_width);

// Inverse of parse for clean segment lists: SIG, id symbols, payload, per
// segment in order. Throws std::invalid_argument when a gene_id does not fit
// in id_width symbols or a payload value is not 0/1.
SegmentedGenome serialize(std::span<const Segment> segments, unsigned id_width);

// Fraction of ones in the payload. An empty payload decodes to 0 and is
// flagged so callers can tell it apart from an all-zero gene.
struct ExtendedValue {
  double value = 0.0;
  bool empty = false;
};
ExtendedValue decode_extended(std::span<const std::uint8_t> payload);

// Number of differing loci. Throws std::invalid_argument on length mismatch.
std::size_t hamming(const FlatGenome& a, const FlatGenome& b);

// Mean pairwise Hamming distance over all unordered pairs. Requires at least
// two individuals of equal length.
double diversity(std::span<const FlatGenome> population);

// Loci that are 0 in every member. Requires equal lengths.
std::size_t count_fixed_zero_loci(std::span<const FlatGenome> population);

// Textual genome literals: '0', '1', 'S', whitespace ignored.
std::string to_text(const FlatGenome& genome);
std::string to_text(const SegmentedGenome& genome);
FlatGenome flat_from_text(std::string_view text);
SegmentedGenome segmented_from_text(std::string_view text);

}  // namespace galab

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpgset/element_set.hpp"

namespace cpgset {

// Equivalence relation on {0, ..., n-1} in canonical form: block_id[x] is
// the least member of x's block. Two partitions are equal iff their block_id
// arrays are, and they order lexicographically by that array.
class Partition {
 public:
  Partition() = default;

  static Partition identity(std::size_t n);
  static Partition universal(std::size_t n);
  // Elements with equal labels share a block; labels are arbitrary.
  static Partition from_labels(std::span<Element const> labels);
  // Listed blocks; unlisted elements become singletons. Overlapping blocks
  // are merged.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks);

  std::size_t carrier_size() const noexcept { return block_id_.size(); }
  Element leader(Element x) const { return block_id_[x]; }
  bool related(Element a, Element b) const { return block_id_[a] == block_id_[b]; }
  std::vector<Element> const& block_ids() const noexcept { return block_id_; }

  std::vector<std::vector<Element>> blocks() const;
  std::vector<Element> block_of(Element x) const;
  std::size_t block_count() const;
  bool is_identity() const;
  bool is_universal() const;

  // Every block of *this lies inside a block of `coarser`.
  bool refines(Partition const& coarser) const;

  friend auto operator<=>(Partition const&, Partition const&) = default;
  friend bool operator==(Partition const&, Partition const&) = default;

 private:
  std::vector<Element> block_id_;
};

// Least partition containing both (union followed by transitive closure).
Partition join(Partition const& p, Partition const& q);
// Intersection.
Partition meet(Partition const& p, Partition const& q);

// "{{0,2},{1},{3}}"
std::string to_string(Partition const& p);

struct ElementPair {
  Element first = 0;
  Element second = 0;
  friend auto operator<=>(ElementPair const&, ElementPair const&) = default;
};

std::string to_string(ElementPair p);

// Binary relation on {0, ..., n-1} as a bit matrix.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n);

  std::size_t carrier_size() const noexcept { return n_; }
  bool contains(Element a, Element c) const { return (bits_[a * words_ + c / 64] >> (c % 64)) & 1U; }
  void insert(Element a, Element c) { bits_[a * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  std::size_t size() const;
  std::vector<ElementPair> pairs() const;

  friend bool operator==(BinaryRelation const&, BinaryRelation const&) = default;

 private:
  friend BinaryRelation compose(Partition const& p, Partition const& q);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

BinaryRelation as_relation(Partition const& p);

// p o q = {(a, c) : exists b with (a, b) in p and (b, c) in q}.
// Throws CarrierMismatch.
BinaryRelation compose(Partition const& p, Partition const& q);

// Lexicographically least pair in the symmetric difference of p o q and
// q o p, or nullopt when p and q permute.
std::optional<ElementPair> least_nonpermuting_pair(Partition const& p, Partition const& q);

struct NonPermutingWitness {
  Partition alpha;
  Partition beta;
  ElementPair pair;
  // true: pair lies in alpha o beta but not beta o alpha; false: the reverse.
  bool in_alpha_beta = true;
};

struct PermutabilityVerdict {
  bool permutable = true;
  std::optional<NonPermutingWitness> witness;
  std::size_t congruences = 0;
  std::size_t pairs_checked = 0;
};

std::string describe(NonPermutingWitness const& w);

// Does p o q = q o p.
PermutabilityVerdict permutable_pair(Partition const& p, Partition const& q);

// Scans pairs (i, j), i < j, in the given order and stops at the first pair
// that does not permute.
PermutabilityVerdict all_pairs_permute(std::span<Partition const> congruences);

}  // namespace cpgset

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cpgset {

using Element = std::uint32_t;

// Subset of {0, ..., 63} stored as a bitmask. Used for subgroups, set
// products and semigroup ideals, all of which live on carriers far below
// the 64-element ceiling at the sizes this library targets.
class ElementSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}
  ElementSet(std::initializer_list<Element> members) noexcept {
    for (Element x : members) insert(x);
  }

  static ElementSet full(std::size_t n) noexcept {
    return ElementSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr void insert(Element x) noexcept { bits_ |= std::uint64_t{1} << x; }
  constexpr bool contains(Element x) const noexcept { return (bits_ >> x) & 1U; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }

  constexpr bool is_subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) noexcept { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) noexcept { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) noexcept = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by size, then lexicographically by the sorted member list.
bool canonical_less(ElementSet a, ElementSet b);

// "{0,2,5}"
std::string to_string(ElementSet s);
std::string format_set(std::span<Element const> members);

}  // namespace cpgset

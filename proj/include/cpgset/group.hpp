#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cpgset/element_set.hpp"

namespace cpgset {

// A finite group given by its Cayley table. Elements are 0-based indices;
// row i, column j holds i*j. Instances only come out of validate_group (or
// helpers built on it), so the group axioms always hold.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element x) const { return inverse_[x]; }
  Element product(Element a, Element b) const { return table_[a * order_ + b]; }

  std::vector<Element> const& table() const noexcept { return table_; }
  std::vector<std::vector<Element>> rows() const;

  bool is_abelian() const;

  friend bool operator==(FiniteGroup const&, FiniteGroup const&) = default;

 private:
  friend FiniteGroup validate_group(std::vector<std::vector<Element>> const& table);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

// Checks closure, associativity, identity and inverses, in that order, and
// throws Error naming the first failed axiom: NotSquare, NotClosed(i,j),
// NotAssociative(i,j,k), NoIdentity, NoInverse(i).
FiniteGroup validate_group(std::vector<std::vector<Element>> const& table);

// Relabelling old -> new that moves the identity to index 0 (a transposition
// with whatever sat at 0). The identity permutation when it is already there.
std::vector<Element> identity_first_relabeling(FiniteGroup const& group);

// The group with its elements renamed through `relabel` (old -> new).
FiniteGroup relabel(FiniteGroup const& group, std::span<Element const> relabel);

// Same group with the identity at index 0.
FiniteGroup canonical_group(FiniteGroup const& group);

// A subgroup of a parent group. The parent is referenced, not owned, and must
// outlive the subgroup.
class Subgroup {
 public:
  // Throws H0NotSubgroup when `members` fails closure, identity, inverse
  // membership or Lagrange's divisibility.
  Subgroup(FiniteGroup const& parent, ElementSet members);

  FiniteGroup const& parent() const noexcept { return *parent_; }
  ElementSet members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return members_.contains(x); }

  friend bool operator==(Subgroup const& a, Subgroup const& b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  FiniteGroup const* parent_;
  ElementSet members_;
};

bool is_subgroup(FiniteGroup const& group, ElementSet members);

// Smallest subgroup containing `generators`.
ElementSet generated_subgroup(FiniteGroup const& group, ElementSet generators);

// All subgroups, ordered by (size, sorted member list).
std::vector<Subgroup> subgroups(FiniteGroup const& group);

// All subgroups K with lower <= K <= G, in the same canonical order.
std::vector<Subgroup> interval_subgroups(FiniteGroup const& group, Subgroup const& lower);

// {h*k : h in H, k in K}. Throws DifferentParents when H and K belong to
// different group objects.
ElementSet set_product(Subgroup const& h, Subgroup const& k);

}  // namespace cpgset

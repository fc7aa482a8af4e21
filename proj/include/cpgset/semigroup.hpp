#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpgset/congruence.hpp"
#include "cpgset/gset.hpp"
#include "cpgset/partition.hpp"

namespace cpgset {

enum class RoleKind { GroupPart, SetPart, Zero };

// Where an element of a (G,X,0) semigroup came from: a group element, a
// carrier point, or the adjoined zero (source unused).
struct Role {
  RoleKind kind = RoleKind::Zero;
  Element source = 0;
  friend bool operator==(Role const&, Role const&) = default;
};

class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  std::size_t order() const noexcept { return order_; }
  Element product(Element a, Element b) const { return table_[a * order_ + b]; }
  std::vector<Element> const& table() const noexcept { return table_; }
  std::vector<std::vector<Element>> rows() const;
  std::optional<Element> zero() const noexcept { return zero_; }

  bool has_roles() const noexcept { return !roles_.empty(); }
  std::vector<Role> const& roles() const noexcept { return roles_; }
  Role role(Element s) const { return roles_.at(s); }

  friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&) = default;

 private:
  friend FiniteSemigroup validate_semigroup(std::vector<std::vector<Element>> const& table);
  friend FiniteSemigroup attach_roles(FiniteSemigroup s, std::vector<Role> roles);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::optional<Element> zero_;
  std::vector<Role> roles_;
};

// Range and associativity check (NotAssociative(i,j,k) on the least failing
// triple), then zero detection.
FiniteSemigroup validate_semigroup(std::vector<std::vector<Element>> const& table);

// Tags elements with roles after checking the (G,X,0) role invariants:
// group part closed, set part times group part in the set part, every
// product with a set-part or zero right factor equal to the zero. Throws
// RoleMismatch.
FiniteSemigroup attach_roles(FiniteSemigroup s, std::vector<Role> roles);

// S = G u X u {0}: group elements first (identity at index 0), then carrier
// points in order, zero last.
FiniteSemigroup build_gx0(GSet const& x);

// Left translations s*- for every s, then right translations -*s.
UnaryAlgebra translations(FiniteSemigroup const& s);

struct SemigroupCompatibilityWitness {
  Element a = 0;
  Element b = 0;
  Element multiplier = 0;
  // true: s*a vs s*b failed; false: a*s vs b*s failed.
  bool left = true;
};

std::optional<SemigroupCompatibilityWitness> sg_congruence_violation(FiniteSemigroup const& s, Partition const& p);
bool is_sg_congruence(FiniteSemigroup const& s, Partition const& p);

std::vector<Partition> sg_congruences_bruteforce(FiniteSemigroup const& s,
                                                 std::size_t cutoff = default_bruteforce_cutoff);
std::vector<Partition> sg_congruences_principal(FiniteSemigroup const& s);
// The principal-closure enumerator, which has no size cutoff.
std::vector<Partition> sg_congruences(FiniteSemigroup const& s);

PermutabilityVerdict sg_permutable(FiniteSemigroup const& s);

// p (a congruence on the carrier) on the set-part elements, every other
// element a singleton. Throws NotAGSetCongruence.
Partition lift_congruence(FiniteSemigroup const& s, Partition const& p);

// p restricted to the set-part elements, re-indexed by carrier point.
// Throws NotACongruence.
Partition restrict_congruence(FiniteSemigroup const& s, Partition const& p);

// Two-sided ideals in canonical (size, members) order, as unions of
// principal ideals S^1 a S^1.
std::vector<ElementSet> ideals(FiniteSemigroup const& s);
// Every subset checked directly. Order <= 12 only (TooLarge otherwise).
std::vector<ElementSet> ideals_subset_scan(FiniteSemigroup const& s);

struct ChainVerdict {
  bool chain = true;
  std::optional<std::pair<ElementSet, ElementSet>> witness;
  std::size_t ideals = 0;
};

ChainVerdict ideals_form_chain(FiniteSemigroup const& s);

// build_gx0 of each orbit, in orbit order.
std::vector<FiniteSemigroup> orbit_subsemigroups(GSet const& x);

// Segregation checked over the congruences of build_gx0(x), with orbits
// located by element role.
SegregationVerdict sg_segregated(GSet const& x);

}  // namespace cpgset

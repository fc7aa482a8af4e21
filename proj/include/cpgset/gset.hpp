#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cpgset/group.hpp"

namespace cpgset {

// A finite right G-set: carrier {0, ..., m-1} with x^g stored row-major in an
// m x |G| action table. Owns a copy of its group.
class GSet {
 public:
  GSet() = default;

  FiniteGroup const& group() const noexcept { return group_; }
  std::size_t carrier_size() const noexcept { return carrier_size_; }
  Element act(Element x, Element g) const { return action_[x * group_.order() + g]; }
  std::vector<Element> const& action() const noexcept { return action_; }
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(GSet const&, GSet const&) = default;

 private:
  friend GSet validate_gset(FiniteGroup group, std::vector<std::vector<Element>> const& action);

  FiniteGroup group_;
  std::size_t carrier_size_ = 0;
  std::vector<Element> action_;
};

// Checks ranges, then x^e = x (IdentityAxiomFails(x)), then
// (x^g)^h = x^(gh) (CompatibilityFails(x,g,h)).
GSet validate_gset(FiniteGroup group, std::vector<std::vector<Element>> const& action);

// Same G-set with the group relabelled so the identity sits at index 0.
GSet canonical_gset(GSet const& x);

struct OrbitDecomposition {
  // Sorted blocks, ordered by least element.
  std::vector<std::vector<Element>> blocks;
  // orbit_of[x] = index into blocks.
  std::vector<std::size_t> orbit_of;

  std::size_t size() const noexcept { return blocks.size(); }
};

OrbitDecomposition orbits(GSet const& x);
bool is_transitive(GSet const& x);

// The stabilizer of `point`; its parent is x.group().
Subgroup stabilizer(GSet const& x, Element point);

// G acting on the right cosets Hg by (Hg)^k = H(gk). Cosets are numbered by
// their least element, so the coset H itself is point 0 whenever the
// identity is element 0.
GSet coset_action(FiniteGroup const& group, Subgroup const& h);

// Disjoint union of G-sets over the same group, carriers re-indexed block by
// block in the given order.
GSet disjoint_union(std::span<GSet const> parts);

// The sub-G-set on `points` (which must be closed under the action),
// re-indexed in ascending order of the given points.
GSet restrict_to(GSet const& x, std::span<Element const> points);

// The i-th orbit as a transitive G-set.
GSet orbit_gset(GSet const& x, OrbitDecomposition const& decomposition, std::size_t i);

struct CatalogInstance {
  // e.g. "S3[{0,1}+{0}]": group name, then the subgroup behind each orbit.
  std::string name;
  GSet gset;
  std::size_t orbit_count = 0;
};

// Deterministic test corpus: for each built-in group of order <=
// max_group_order, every coset action and every multiset of at most
// max_orbits of them with total carrier <= max_carrier, as disjoint unions.
std::vector<CatalogInstance> catalog(std::size_t max_group_order, std::size_t max_carrier, std::size_t max_orbits);

}  // namespace cpgset

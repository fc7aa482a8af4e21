#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpgset/gset.hpp"
#include "cpgset/partition.hpp"

namespace cpgset {

// A finite unary algebra: a carrier and a list of maps on it. G-sets (one
// map per group element) and semigroups (one map per left and per right
// translation) are both viewed this way for congruence work.
struct UnaryAlgebra {
  std::size_t carrier_size = 0;
  // operations[k][x] = image of x under the k-th map.
  std::vector<std::vector<Element>> operations;
};

UnaryAlgebra as_unary_algebra(GSet const& x);

struct CompatibilityWitness {
  Element a = 0;
  Element b = 0;
  // Index of the offending operation (the group element for a G-set).
  std::size_t operation = 0;
};

inline constexpr std::size_t default_bruteforce_cutoff = 10;

// nullopt when p is compatible with every operation; otherwise the least
// (a, b, operation) with a ~ b but op(a) !~ op(b). Throws CarrierMismatch.
std::optional<CompatibilityWitness> compatibility_violation(UnaryAlgebra const& algebra, Partition const& p);

// Every partition of the carrier that is compatible, by exhaustive
// restricted-growth-string enumeration. Throws CarrierTooLarge above cutoff.
std::vector<Partition> congruences_bruteforce(UnaryAlgebra const& algebra,
                                              std::size_t cutoff = default_bruteforce_cutoff);

// Least congruence relating a and b.
Partition principal_congruence(UnaryAlgebra const& algebra, Element a, Element b);

// Join-closure of all principal congruences (plus the identity).
std::vector<Partition> congruences_principal(UnaryAlgebra const& algebra);

// G-set front ends.
std::optional<CompatibilityWitness> congruence_violation(GSet const& x, Partition const& p);
bool is_congruence(GSet const& x, Partition const& p);
std::vector<Partition> congruences_bruteforce(GSet const& x, std::size_t cutoff = default_bruteforce_cutoff);
std::vector<Partition> congruences_principal(GSet const& x);
Partition principal_congruence(GSet const& x, Element a, Element b);

PermutabilityVerdict gset_permutable(GSet const& x);

struct SegregationWitness {
  Partition congruence;
  std::size_t orbit_a = 0;
  std::size_t orbit_b = 0;
  // A pair inside orbit_a u orbit_b that the congruence does not relate.
  ElementPair unlinked;
};

struct SegregationVerdict {
  bool segregated = true;
  std::optional<SegregationWitness> witness;
  std::size_t congruences = 0;
};

std::string describe(SegregationWitness const& w);

// Checks the segregation condition for each congruence against the given
// orbits (lists of carrier elements).
SegregationVerdict segregation_check(std::vector<Partition> const& congruences,
                                     std::vector<std::vector<Element>> const& orbits);

SegregationVerdict is_segregated(GSet const& x);

}  // namespace cpgset

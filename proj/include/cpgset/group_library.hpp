#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpgset/group.hpp"

namespace cpgset {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

// Group generated by permutations of {0, ..., degree-1}, composed left to
// right so that x^(gh) = (x^g)^h. Elements are the generated permutations in
// lexicographic order of their image lists (identity first). When `elements`
// is non-null it receives those image lists.
FiniteGroup permutation_group(std::vector<std::vector<Element>> const& generators,
                              std::vector<std::vector<Element>>* elements = nullptr);

FiniteGroup symmetric_group_3(std::vector<std::vector<Element>>* elements = nullptr);
FiniteGroup dihedral_group_8(std::vector<std::vector<Element>>* elements = nullptr);
FiniteGroup quaternion_group();

// Every group of order <= 8 up to isomorphism, ordered by order then name:
// Z1..Z8, Z2xZ2, Z2xZ4, Z2xZ2xZ2, S3, D4, Q8. Identity is index 0 in each.
std::span<NamedGroup const> builtin_groups();

// Throws Error(FormatError) for an unknown name.
FiniteGroup const& builtin_group(std::string_view name);

}  // namespace cpgset

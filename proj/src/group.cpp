#include "cpgset/group.hpp"

#include <algorithm>
#include <set>

#include "cpgset/error.hpp"

namespace cpgset {

std::vector<std::vector<Element>> FiniteGroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (product(a, b) != product(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup validate_group(std::vector<std::vector<Element>> const& table) {
  std::size_t const n = table.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, {}, "group table is empty");
  if (n > ElementSet::capacity) {
    throw Error(ErrorKind::TooLarge, {n}, "group order exceeds 64");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::NotSquare, {i}, "row " + std::to_string(i) + " has the wrong length");
    }
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorKind::NotClosed, {i, j}, "product out of range");
      }
      g.table_.push_back(table[i][j]);
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      for (Element k = 0; k < n; ++k) {
        if (g.product(g.product(i, j), k) != g.product(i, g.product(j, k))) {
          throw Error(ErrorKind::NotAssociative, {i, j, k}, "associativity fails");
        }
      }
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = g.product(e, x) == x && g.product(x, e) == x;
    }
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, {}, "no identity element");
  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool has = false;
    for (Element y = 0; y < n && !has; ++y) {
      if (g.product(x, y) == g.identity_ && g.product(y, x) == g.identity_) {
        g.inverse_[x] = y;
        has = true;
      }
    }
    if (!has) throw Error(ErrorKind::NoInverse, {x}, "element has no inverse");
  }
  return g;
}

std::vector<Element> identity_first_relabeling(FiniteGroup const& group) {
  std::vector<Element> perm(group.order());
  for (Element i = 0; i < perm.size(); ++i) perm[i] = i;
  std::swap(perm[0], perm[group.identity()]);
  return perm;
}

FiniteGroup relabel(FiniteGroup const& group, std::span<Element const> relabel) {
  std::size_t const n = group.order();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      rows[relabel[a]][relabel[b]] = relabel[group.product(a, b)];
    }
  }
  return validate_group(rows);
}

FiniteGroup canonical_group(FiniteGroup const& group) {
  if (group.identity() == 0) return group;
  return relabel(group, identity_first_relabeling(group));
}

bool is_subgroup(FiniteGroup const& group, ElementSet members) {
  if (!members.contains(group.identity())) return false;
  if (group.order() % members.size() != 0) return false;
  auto const elems = members.members();
  for (Element a : elems) {
    if (!members.contains(group.inverse(a))) return false;
    for (Element b : elems) {
      if (!members.contains(group.product(a, b))) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(FiniteGroup const& parent, ElementSet members) : parent_(&parent), members_(members) {
  if (parent.order() < ElementSet::capacity && (members.bits() >> parent.order()) != 0) {
    throw Error(ErrorKind::H0NotSubgroup, {}, "member index out of range");
  }
  if (!is_subgroup(parent, members)) {
    throw Error(ErrorKind::H0NotSubgroup, {}, to_string(members) + " is not a subgroup");
  }
}

ElementSet generated_subgroup(FiniteGroup const& group, ElementSet generators) {
  ElementSet result = generators;
  result.insert(group.identity());
  // In a finite group closure under products already gives inverses.
  for (;;) {
    ElementSet next = result;
    auto const elems = result.members();
    for (Element a : elems) {
      for (Element b : elems) next.insert(group.product(a, b));
    }
    if (next == result) return result;
    result = next;
  }
}

std::vector<Subgroup> subgroups(FiniteGroup const& group) {
  std::size_t const n = group.order();
  std::set<std::uint64_t> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    if (seen.insert(s.bits()).second) found.push_back(s);
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) add(generated_subgroup(group, ElementSet{a, b}));
  }
  // Joins of everything found so far, to a fixpoint, so that subgroups
  // needing more than two generators are reached too.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet const u = found[i] | found[j];
      if (u == found[i] || u == found[j]) continue;
      add(generated_subgroup(group, u));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (ElementSet s : found) out.emplace_back(group, s);
  return out;
}

std::vector<Subgroup> interval_subgroups(FiniteGroup const& group, Subgroup const& lower) {
  if (&lower.parent() != &group) {
    throw Error(ErrorKind::H0NotSubgroup, {}, "lower bound belongs to a different group");
  }
  std::vector<Subgroup> out;
  for (Subgroup const& k : subgroups(group)) {
    if (lower.members().is_subset_of(k.members())) out.push_back(k);
  }
  return out;
}

ElementSet set_product(Subgroup const& h, Subgroup const& k) {
  if (&h.parent() != &k.parent()) {
    throw Error(ErrorKind::DifferentParents, {}, "subgroups of different groups");
  }
  FiniteGroup const& g = h.parent();
  ElementSet out;
  for (Element a : h.members().members()) {
    for (Element b : k.members().members()) out.insert(g.product(a, b));
  }
  return out;
}

}  // namespace cpgset

#include "cpgset/semigroup.hpp"

#include <algorithm>
#include <set>

#include "cpgset/error.hpp"

namespace cpgset {

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

FiniteSemigroup validate_semigroup(std::vector<std::vector<Element>> const& table) {
  std::size_t const n = table.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, {}, "semigroup table is empty");
  FiniteSemigroup s;
  s.order_ = n;
  s.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::NotSquare, {i}, "row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error(ErrorKind::NotClosed, {i, j}, "product out of range");
      s.table_.push_back(table[i][j]);
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      for (Element k = 0; k < n; ++k) {
        if (s.product(s.product(i, j), k) != s.product(i, s.product(j, k))) {
          throw Error(ErrorKind::NotAssociative, {i, j, k}, "associativity fails");
        }
      }
    }
  }
  for (Element z = 0; z < n && !s.zero_; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = s.product(z, x) == z && s.product(x, z) == z;
    if (ok) s.zero_ = z;
  }
  return s;
}

FiniteSemigroup attach_roles(FiniteSemigroup s, std::vector<Role> roles) {
  std::size_t const n = s.order();
  if (roles.size() != n) throw Error(ErrorKind::RoleMismatch, {roles.size(), n}, "one role per element expected");
  auto fail = [](Element a, Element b, char const* what) {
    throw Error(ErrorKind::RoleMismatch, {a, b}, what);
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      RoleKind const ra = roles[a].kind;
      RoleKind const rb = roles[b].kind;
      RoleKind const rp = roles[s.product(a, b)].kind;
      if (rb != RoleKind::GroupPart) {
        if (rp != RoleKind::Zero) fail(a, b, "product with a set-part or zero right factor is not zero");
      } else if (ra == RoleKind::GroupPart && rp != RoleKind::GroupPart) {
        fail(a, b, "group part is not closed");
      } else if (ra == RoleKind::SetPart && rp != RoleKind::SetPart) {
        fail(a, b, "set part times group part left the set part");
      } else if (ra == RoleKind::Zero && rp != RoleKind::Zero) {
        fail(a, b, "zero times group part is not zero");
      }
    }
  }
  s.roles_ = std::move(roles);
  return s;
}

FiniteSemigroup build_gx0(GSet const& x) {
  FiniteGroup const& g = x.group();
  std::size_t const n = g.order();
  std::size_t const m = x.carrier_size();
  auto const perm = identity_first_relabeling(g);
  std::vector<Element> original(n);
  for (Element a = 0; a < n; ++a) original[perm[a]] = a;
  auto const zero = static_cast<Element>(n + m);
  std::size_t const order = n + m + 1;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order, zero));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) t[i][j] = perm[g.product(original[i], original[j])];
  }
  for (Element p = 0; p < m; ++p) {
    for (Element j = 0; j < n; ++j) t[n + p][j] = static_cast<Element>(n + x.act(p, original[j]));
  }
  std::vector<Role> roles;
  roles.reserve(order);
  for (Element i = 0; i < n; ++i) roles.push_back({RoleKind::GroupPart, original[i]});
  for (Element p = 0; p < m; ++p) roles.push_back({RoleKind::SetPart, p});
  roles.push_back({RoleKind::Zero, 0});
  return attach_roles(validate_semigroup(t), std::move(roles));
}

UnaryAlgebra translations(FiniteSemigroup const& s) {
  std::size_t const n = s.order();
  UnaryAlgebra a;
  a.carrier_size = n;
  a.operations.assign(2 * n, std::vector<Element>(n));
  for (Element m = 0; m < n; ++m) {
    for (Element x = 0; x < n; ++x) {
      a.operations[m][x] = s.product(m, x);
      a.operations[n + m][x] = s.product(x, m);
    }
  }
  return a;
}

std::optional<SemigroupCompatibilityWitness> sg_congruence_violation(FiniteSemigroup const& s, Partition const& p) {
  auto const w = compatibility_violation(translations(s), p);
  if (!w) return std::nullopt;
  std::size_t const n = s.order();
  bool const left = w->operation < n;
  return SemigroupCompatibilityWitness{w->a, w->b, static_cast<Element>(left ? w->operation : w->operation - n), left};
}

bool is_sg_congruence(FiniteSemigroup const& s, Partition const& p) { return !sg_congruence_violation(s, p); }

std::vector<Partition> sg_congruences_bruteforce(FiniteSemigroup const& s, std::size_t cutoff) {
  return congruences_bruteforce(translations(s), cutoff);
}

std::vector<Partition> sg_congruences_principal(FiniteSemigroup const& s) {
  return congruences_principal(translations(s));
}

std::vector<Partition> sg_congruences(FiniteSemigroup const& s) { return sg_congruences_principal(s); }

PermutabilityVerdict sg_permutable(FiniteSemigroup const& s) {
  auto const cons = sg_congruences(s);
  return all_pairs_permute(cons);
}

namespace {

// Semigroup index of each carrier point, by role.
std::vector<Element> set_part_indices(FiniteSemigroup const& s) {
  if (!s.has_roles()) throw Error(ErrorKind::RoleMismatch, {}, "semigroup carries no role tags");
  std::vector<std::pair<Element, Element>> found;
  for (Element i = 0; i < s.order(); ++i) {
    Role const r = s.role(i);
    if (r.kind == RoleKind::SetPart) found.emplace_back(r.source, i);
  }
  std::sort(found.begin(), found.end());
  std::vector<Element> out;
  for (auto const& [point, index] : found) out.push_back(index);
  return out;
}

}  // namespace

Partition lift_congruence(FiniteSemigroup const& s, Partition const& p) {
  auto const index = set_part_indices(s);
  std::size_t const m = index.size();
  if (p.carrier_size() != m) throw Error(ErrorKind::CarrierMismatch, {p.carrier_size(), m}, "carrier sizes differ");
  // The action read back off the table: x * g for every group-part g.
  UnaryAlgebra action;
  action.carrier_size = m;
  for (Element g = 0; g < s.order(); ++g) {
    if (s.role(g).kind != RoleKind::GroupPart) continue;
    std::vector<Element> op(m);
    for (Element x = 0; x < m; ++x) op[x] = s.role(s.product(index[x], g)).source;
    action.operations.push_back(std::move(op));
  }
  if (auto w = compatibility_violation(action, p)) {
    throw Error(ErrorKind::NotAGSetCongruence, {w->a, w->b}, to_string(p) + " is not a G-set congruence");
  }
  std::vector<std::vector<Element>> blocks;
  for (auto const& block : p.blocks()) {
    std::vector<Element> lifted;
    for (Element x : block) lifted.push_back(index[x]);
    blocks.push_back(std::move(lifted));
  }
  return Partition::from_blocks(s.order(), blocks);
}

Partition restrict_congruence(FiniteSemigroup const& s, Partition const& p) {
  auto const index = set_part_indices(s);
  if (auto w = sg_congruence_violation(s, p)) {
    throw Error(ErrorKind::NotACongruence, {w->a, w->b}, to_string(p) + " is not a semigroup congruence");
  }
  std::vector<Element> labels(index.size());
  for (std::size_t x = 0; x < index.size(); ++x) labels[x] = p.leader(index[x]);
  return Partition::from_labels(labels);
}

std::vector<ElementSet> ideals(FiniteSemigroup const& s) {
  std::size_t const n = s.order();
  if (n > ElementSet::capacity) throw Error(ErrorKind::TooLarge, {n}, "semigroup too large for ideal enumeration");
  std::set<std::uint64_t> principal;
  for (Element a = 0; a < n; ++a) {
    ElementSet i{a};
    for (Element u = 0; u < n; ++u) {
      i.insert(s.product(u, a));
      i.insert(s.product(a, u));
      for (Element v = 0; v < n; ++v) i.insert(s.product(s.product(u, a), v));
    }
    principal.insert(i.bits());
  }
  std::set<std::uint64_t> all(principal);
  std::vector<std::uint64_t> frontier(principal.begin(), principal.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : frontier) {
      for (std::uint64_t p : principal) {
        if (all.insert(f | p).second) next.push_back(f | p);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out;
  for (std::uint64_t b : all) out.emplace_back(b);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElementSet> ideals_subset_scan(FiniteSemigroup const& s) {
  std::size_t const n = s.order();
  if (n > 12) throw Error(ErrorKind::TooLarge, {n}, "subset scan limited to order 12");
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet const i(bits);
    bool ok = true;
    for (Element a : i.members()) {
      for (Element u = 0; u < n && ok; ++u) ok = i.contains(s.product(u, a)) && i.contains(s.product(a, u));
      if (!ok) break;
    }
    if (ok) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

ChainVerdict ideals_form_chain(FiniteSemigroup const& s) {
  auto const all = ideals(s);
  ChainVerdict v;
  v.ideals = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!all[i].is_subset_of(all[j]) && !all[j].is_subset_of(all[i])) {
        v.chain = false;
        v.witness = std::make_pair(all[i], all[j]);
        return v;
      }
    }
  }
  return v;
}

std::vector<FiniteSemigroup> orbit_subsemigroups(GSet const& x) {
  auto const d = orbits(x);
  std::vector<FiniteSemigroup> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(build_gx0(orbit_gset(x, d, i)));
  return out;
}

SegregationVerdict sg_segregated(GSet const& x) {
  FiniteSemigroup const s = build_gx0(x);
  auto const index = set_part_indices(s);
  std::vector<std::vector<Element>> orbit_elements;
  for (auto const& block : orbits(x).blocks) {
    std::vector<Element> mapped;
    for (Element p : block) mapped.push_back(index[p]);
    orbit_elements.push_back(std::move(mapped));
  }
  return segregation_check(sg_congruences(s), orbit_elements);
}

}  // namespace cpgset

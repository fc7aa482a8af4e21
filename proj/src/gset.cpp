#include "cpgset/gset.hpp"

#include <algorithm>
#include <numeric>

#include "cpgset/error.hpp"
#include "cpgset/group_library.hpp"

namespace cpgset {

std::vector<std::vector<Element>> GSet::rows() const {
  std::size_t const n = group_.order();
  std::vector<std::vector<Element>> out(carrier_size_);
  for (std::size_t x = 0; x < carrier_size_; ++x) {
    out[x].assign(action_.begin() + static_cast<std::ptrdiff_t>(x * n),
                  action_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
  }
  return out;
}

GSet validate_gset(FiniteGroup group, std::vector<std::vector<Element>> const& action) {
  std::size_t const m = action.size();
  std::size_t const n = group.order();
  if (m == 0) throw Error(ErrorKind::OutOfRange, {}, "empty carrier");
  GSet out;
  out.carrier_size_ = m;
  out.action_.reserve(m * n);
  for (std::size_t x = 0; x < m; ++x) {
    if (action[x].size() != n) {
      throw Error(ErrorKind::NotSquare, {x}, "action row " + std::to_string(x) + " has the wrong length");
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (action[x][g] >= m) throw Error(ErrorKind::OutOfRange, {x, g}, "action image out of range");
      out.action_.push_back(action[x][g]);
    }
  }
  out.group_ = std::move(group);
  FiniteGroup const& gr = out.group_;
  for (Element x = 0; x < m; ++x) {
    if (out.act(x, gr.identity()) != x) {
      throw Error(ErrorKind::IdentityAxiomFails, {x}, "x^e != x");
    }
  }
  for (Element x = 0; x < m; ++x) {
    for (Element g = 0; g < n; ++g) {
      for (Element h = 0; h < n; ++h) {
        if (out.act(out.act(x, g), h) != out.act(x, gr.product(g, h))) {
          throw Error(ErrorKind::CompatibilityFails, {x, g, h}, "(x^g)^h != x^(gh)");
        }
      }
    }
  }
  return out;
}

GSet canonical_gset(GSet const& x) {
  if (x.group().identity() == 0) return x;
  auto const perm = identity_first_relabeling(x.group());
  auto rows = x.rows();
  std::vector<std::vector<Element>> moved(rows.size(), std::vector<Element>(x.group().order()));
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (Element g = 0; g < x.group().order(); ++g) moved[p][perm[g]] = rows[p][g];
  }
  return validate_gset(relabel(x.group(), perm), moved);
}

OrbitDecomposition orbits(GSet const& x) {
  std::size_t const m = x.carrier_size();
  std::size_t const n = x.group().order();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  OrbitDecomposition d;
  d.orbit_of.assign(m, unseen);
  for (Element start = 0; start < m; ++start) {
    if (d.orbit_of[start] != unseen) continue;
    std::size_t const id = d.blocks.size();
    std::vector<Element> block{start};
    d.orbit_of[start] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (Element g = 0; g < n; ++g) {
        Element const y = x.act(block[i], g);
        if (d.orbit_of[y] == unseen) {
          d.orbit_of[y] = id;
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
  }
  return d;
}

bool is_transitive(GSet const& x) { return orbits(x).size() == 1; }

Subgroup stabilizer(GSet const& x, Element point) {
  if (point >= x.carrier_size()) throw Error(ErrorKind::OutOfRange, {point}, "point out of range");
  ElementSet fix;
  for (Element g = 0; g < x.group().order(); ++g) {
    if (x.act(point, g) == point) fix.insert(g);
  }
  return Subgroup(x.group(), fix);
}

GSet coset_action(FiniteGroup const& group, Subgroup const& h) {
  std::size_t const n = group.order();
  // coset_of[g] = index of Hg, numbering cosets by their least element.
  std::vector<Element> coset_of(n, static_cast<Element>(n));
  std::vector<Element> representative;
  for (Element g = 0; g < n; ++g) {
    if (coset_of[g] != n) continue;
    auto const id = static_cast<Element>(representative.size());
    representative.push_back(g);
    for (Element k : h.members().members()) coset_of[group.product(k, g)] = id;
  }
  std::vector<std::vector<Element>> action(representative.size(), std::vector<Element>(n));
  for (std::size_t c = 0; c < representative.size(); ++c) {
    for (Element k = 0; k < n; ++k) action[c][k] = coset_of[group.product(representative[c], k)];
  }
  return validate_gset(group, action);
}

GSet disjoint_union(std::span<GSet const> parts) {
  if (parts.empty()) throw Error(ErrorKind::OutOfRange, {}, "disjoint union of nothing");
  FiniteGroup const& group = parts.front().group();
  std::vector<std::vector<Element>> action;
  Element offset = 0;
  for (GSet const& part : parts) {
    if (!(part.group() == group)) throw Error(ErrorKind::DifferentParents, {}, "G-sets over different groups");
    for (auto row : part.rows()) {
      for (Element& y : row) y += offset;
      action.push_back(std::move(row));
    }
    offset += static_cast<Element>(part.carrier_size());
  }
  return validate_gset(group, action);
}

GSet restrict_to(GSet const& x, std::span<Element const> points) {
  std::vector<Element> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Element> index(x.carrier_size(), static_cast<Element>(x.carrier_size()));
  for (Element i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  std::vector<std::vector<Element>> action(sorted.size(), std::vector<Element>(x.group().order()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (Element g = 0; g < x.group().order(); ++g) {
      Element const y = x.act(sorted[i], g);
      if (index[y] == x.carrier_size()) {
        throw Error(ErrorKind::OutOfRange, {sorted[i], g}, "point set is not closed under the action");
      }
      action[i][g] = index[y];
    }
  }
  return validate_gset(x.group(), action);
}

GSet orbit_gset(GSet const& x, OrbitDecomposition const& decomposition, std::size_t i) {
  return restrict_to(x, decomposition.blocks.at(i));
}

std::vector<CatalogInstance> catalog(std::size_t max_group_order, std::size_t max_carrier, std::size_t max_orbits) {
  std::vector<CatalogInstance> out;
  for (NamedGroup const& named : builtin_groups()) {
    FiniteGroup const& group = named.group;
    if (group.order() > max_group_order) continue;
    std::vector<GSet> transitive;
    std::vector<std::string> labels;
    for (Subgroup const& h : subgroups(group)) {
      if (group.order() / h.size() > max_carrier) continue;
      transitive.push_back(coset_action(group, h));
      labels.push_back(to_string(h.members()));
    }
    // Non-decreasing index sequences = multisets of coset actions.
    std::vector<std::size_t> pick;
    auto emit = [&] {
      std::vector<GSet> parts;
      std::string name = named.name + "[";
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (i != 0) name += '+';
        name += labels[pick[i]];
        parts.push_back(transitive[pick[i]]);
      }
      name += ']';
      out.push_back({std::move(name), disjoint_union(parts), pick.size()});
    };
    auto recurse = [&](auto&& self, std::size_t from, std::size_t carrier) -> void {
      if (!pick.empty()) emit();
      if (pick.size() == max_orbits) return;
      for (std::size_t i = from; i < transitive.size(); ++i) {
        std::size_t const size = transitive[i].carrier_size();
        if (carrier + size > max_carrier) continue;
        pick.push_back(i);
        self(self, i, carrier + size);
        pick.pop_back();
      }
    };
    recurse(recurse, 0, 0);
  }
  return out;
}

}  // namespace cpgset

#include "cpgset/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cpgset/error.hpp"

namespace cpgset {

UnaryAlgebra as_unary_algebra(GSet const& x) {
  UnaryAlgebra a;
  a.carrier_size = x.carrier_size();
  a.operations.resize(x.group().order());
  for (Element g = 0; g < x.group().order(); ++g) {
    auto& op = a.operations[g];
    op.resize(x.carrier_size());
    for (Element p = 0; p < x.carrier_size(); ++p) op[p] = x.act(p, g);
  }
  return a;
}

std::optional<CompatibilityWitness> compatibility_violation(UnaryAlgebra const& algebra, Partition const& p) {
  if (p.carrier_size() != algebra.carrier_size) {
    throw Error(ErrorKind::CarrierMismatch, {p.carrier_size(), algebra.carrier_size}, "carrier sizes differ");
  }
  std::size_t const n = algebra.carrier_size;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!p.related(a, b)) continue;
      for (std::size_t k = 0; k < algebra.operations.size(); ++k) {
        auto const& op = algebra.operations[k];
        if (!p.related(op[a], op[b])) return CompatibilityWitness{a, b, k};
      }
    }
  }
  return std::nullopt;
}

std::vector<Partition> congruences_bruteforce(UnaryAlgebra const& algebra, std::size_t cutoff) {
  std::size_t const n = algebra.carrier_size;
  if (n > cutoff) throw Error(ErrorKind::CarrierTooLarge, {n, cutoff}, "carrier above brute-force cutoff");
  std::vector<Partition> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Element> rgs(n, 0);
  std::vector<Element> prefix_max(n, 0);
  auto emit = [&] {
    Partition p = Partition::from_labels(rgs);
    // Compatibility with each map, checked element against its block leader.
    for (auto const& op : algebra.operations) {
      for (Element x = 0; x < n; ++x) {
        if (!p.related(op[x], op[p.leader(x)])) return;
      }
    }
    out.push_back(std::move(p));
  };
  if (n == 0) return out;
  for (;;) {
    emit();
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Element uf_find(std::vector<Element>& parent, Element x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Partition principal_congruence(UnaryAlgebra const& algebra, Element a, Element b) {
  std::size_t const n = algebra.carrier_size;
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  // Only pairs that actually merged two classes need their images pushed:
  // those pairs generate the equivalence, and images of generators suffice.
  std::deque<ElementPair> pending{{a, b}};
  while (!pending.empty()) {
    auto const [x, y] = pending.front();
    pending.pop_front();
    Element rx = uf_find(parent, x);
    Element ry = uf_find(parent, y);
    if (rx == ry) continue;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    for (auto const& op : algebra.operations) pending.push_back({op[x], op[y]});
  }
  std::vector<Element> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = uf_find(parent, x);
  return Partition::from_labels(labels);
}

std::vector<Partition> congruences_principal(UnaryAlgebra const& algebra) {
  std::size_t const n = algebra.carrier_size;
  std::set<Partition> principals;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) principals.insert(principal_congruence(algebra, a, b));
  }
  // Every congruence is the join of the principal congruences below it, so
  // closing {identity} under joins with principals reaches the whole lattice.
  std::set<Partition> lattice{Partition::identity(n)};
  std::vector<Partition> frontier{Partition::identity(n)};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (Partition const& c : frontier) {
      for (Partition const& p : principals) {
        if (p.refines(c)) continue;
        Partition j = join(c, p);
        if (lattice.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

std::optional<CompatibilityWitness> congruence_violation(GSet const& x, Partition const& p) {
  return compatibility_violation(as_unary_algebra(x), p);
}

bool is_congruence(GSet const& x, Partition const& p) { return !congruence_violation(x, p).has_value(); }

std::vector<Partition> congruences_bruteforce(GSet const& x, std::size_t cutoff) {
  return congruences_bruteforce(as_unary_algebra(x), cutoff);
}

std::vector<Partition> congruences_principal(GSet const& x) { return congruences_principal(as_unary_algebra(x)); }

Partition principal_congruence(GSet const& x, Element a, Element b) {
  return principal_congruence(as_unary_algebra(x), a, b);
}

PermutabilityVerdict gset_permutable(GSet const& x) {
  auto const cons = congruences_principal(x);
  return all_pairs_permute(cons);
}

std::string describe(SegregationWitness const& w) {
  return "congruence=" + to_string(w.congruence) + " orbits=(" + std::to_string(w.orbit_a) + "," +
         std::to_string(w.orbit_b) + ") unlinked=" + to_string(w.unlinked);
}

SegregationVerdict segregation_check(std::vector<Partition> const& congruences,
                                     std::vector<std::vector<Element>> const& orbits) {
  SegregationVerdict v;
  v.congruences = congruences.size();
  for (Partition const& c : congruences) {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (std::size_t j = i + 1; j < orbits.size(); ++j) {
        bool linked = false;
        for (Element a : orbits[i]) {
          for (Element b : orbits[j]) linked = linked || c.related(a, b);
        }
        if (!linked) continue;
        std::vector<Element> both(orbits[i]);
        both.insert(both.end(), orbits[j].begin(), orbits[j].end());
        std::sort(both.begin(), both.end());
        for (std::size_t s = 0; s < both.size(); ++s) {
          for (std::size_t t = s + 1; t < both.size(); ++t) {
            if (!c.related(both[s], both[t])) {
              v.segregated = false;
              v.witness = SegregationWitness{c, i, j, {both[s], both[t]}};
              return v;
            }
          }
        }
      }
    }
  }
  return v;
}

SegregationVerdict is_segregated(GSet const& x) {
  return segregation_check(congruences_principal(x), orbits(x).blocks);
}

}  // namespace cpgset

#include <doctest.h>

#include <random>

#include "cpgset/congruence.hpp"
#include "cpgset/group_library.hpp"
#include "cpgset/io.hpp"
#include "cpgset/semigroup.hpp"
#include "oracles.hpp"

using namespace cpgset;

namespace {

// Random G-set: a union of 1..3 coset actions of a random built-in group,
// then a random relabelling of the points.
GSet random_gset(std::mt19937& rng, std::size_t max_carrier) {
  auto const groups = builtin_groups();
  for (;;) {
    FiniteGroup const& g = groups[rng() % groups.size()].group;
    auto const subs = subgroups(g);
    std::vector<GSet> parts;
    std::size_t total = 0;
    std::size_t const k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      auto const& h = subs[rng() % subs.size()];
      parts.push_back(coset_action(g, h));
      total += g.order() / h.size();
    }
    if (total > max_carrier) continue;
    GSet const u = disjoint_union(parts);
    std::vector<Element> perm(total);
    for (Element i = 0; i < total; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Element>> action(total, std::vector<Element>(g.order()));
    for (Element x = 0; x < total; ++x) {
      for (Element e = 0; e < g.order(); ++e) action[perm[x]][e] = perm[u.act(x, e)];
    }
    return validate_gset(g, action);
  }
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("orbit-stabilizer") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
      GSet const x = random_gset(rng, 12);
      auto const d = orbits(x);
      for (Element p = 0; p < x.carrier_size(); ++p) {
        CHECK(d.blocks[d.orbit_of[p]].size() * stabilizer(x, p).size() == x.group().order());
      }
    }
  }

  TEST_CASE("product formula |HK| |H∩K| = |H| |K|") {
    for (auto const& named : builtin_groups()) {
      auto const subs = subgroups(named.group);
      for (auto const& h : subs) {
        CHECK(named.group.order() % h.size() == 0);
        for (auto const& k : subs) {
          CHECK(set_product(h, k).size() * (h.members() & k.members()).size() == h.size() * k.size());
        }
      }
    }
  }

  TEST_CASE("congruence enumerators agree on random G-sets") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
      GSet const x = random_gset(rng, 10);
      auto const brute = congruences_bruteforce(x);
      auto const principal = congruences_principal(x);
      CHECK(brute == principal);
      // Closed under join and meet.
      for (auto const& p : principal) {
        for (auto const& q : principal) {
          CHECK(std::binary_search(principal.begin(), principal.end(), join(p, q)));
          CHECK(std::binary_search(principal.begin(), principal.end(), meet(p, q)));
        }
      }
    }
  }

  TEST_CASE("permutability verdict matches the composition oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      GSet const x = random_gset(rng, 8);
      auto const cons = congruences_principal(x);
      bool all = true;
      for (auto const& p : cons) {
        for (auto const& q : cons) all = all && oracle::compose(p, q) == oracle::compose(q, p);
      }
      CHECK(gset_permutable(x).permutable == all);
    }
  }

  TEST_CASE("build_gx0 role invariants and round trip") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
      GSet const x = random_gset(rng, 8);
      FiniteSemigroup const s = build_gx0(x);
      REQUIRE(s.zero());
      REQUIRE(s.has_roles());
      std::size_t const n = x.group().order();
      for (Element i = 0; i < s.order(); ++i) {
        for (Element j = 0; j < s.order(); ++j) {
          RoleKind const ri = s.role(i).kind;
          RoleKind const rj = s.role(j).kind;
          RoleKind const rp = s.role(s.product(i, j)).kind;
          if (rj != RoleKind::GroupPart) CHECK(rp == RoleKind::Zero);
          else if (ri == RoleKind::GroupPart) CHECK(rp == RoleKind::GroupPart);
          else if (ri == RoleKind::SetPart) CHECK(rp == RoleKind::SetPart);
        }
      }
      CHECK(s.order() == n + x.carrier_size() + 1);
      CHECK(parse_semigroup(serialize(s)) == s);
      CHECK(parse_gset(serialize(x)) == canonical_gset(x));
      for (auto const& p : congruences_principal(x)) {
        Partition const l = lift_congruence(s, p);
        CHECK(is_sg_congruence(s, l));
        CHECK(restrict_congruence(s, l) == p);
      }
    }
  }

  TEST_CASE("semigroup enumerators agree on random G-set semigroups") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      GSet const x = random_gset(rng, 5);
      FiniteSemigroup const s = build_gx0(x);
      if (s.order() > 10) continue;
      CHECK(sg_congruences_bruteforce(s) == sg_congruences_principal(s));
      CHECK(ideals(s) == ideals_subset_scan(s));
    }
  }
}

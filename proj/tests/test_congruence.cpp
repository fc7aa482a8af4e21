#include <doctest.h>

#include <algorithm>

#include "cpgset/congruence.hpp"
#include "cpgset/error.hpp"
#include "cpgset/group_library.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cpgset;

namespace {

// Congruences by filtering every partition of the carrier.
std::vector<Partition> oracle_congruences(GSet const& x) {
  std::vector<Partition> out;
  for (auto const& p : oracle::all_partitions(x.carrier_size())) {
    bool ok = true;
    for (Element a = 0; a < x.carrier_size() && ok; ++a) {
      for (Element b = 0; b < x.carrier_size() && ok; ++b) {
        if (!p.related(a, b)) continue;
        for (Element g = 0; g < x.group().order() && ok; ++g) ok = p.related(x.act(a, g), x.act(b, g));
      }
    }
    if (ok) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("is_congruence") {
    auto const x = fixture_gset("z2_two_orbits");
    CHECK(is_congruence(x, Partition::identity(4)));
    CHECK(is_congruence(x, Partition::universal(4)));
    CHECK(is_congruence(x, Partition::from_blocks(4, {{0, 2}, {1, 3}})));
    auto const bad = Partition::from_blocks(4, {{0, 2}});
    CHECK_FALSE(is_congruence(x, bad));
    CHECK(congruence_violation(x, bad).has_value());
  }

  TEST_CASE("congruence counts") {
    CHECK(congruences_bruteforce(fixture_gset("two_fixed_points")).size() == 2);
    CHECK(congruences_bruteforce(fixture_gset("z4_regular")).size() == 3);
    CHECK(congruences_bruteforce(fixture_gset("s3_natural")).size() == 2);
    for (auto const* name : {"two_fixed_points", "z4_regular", "s3_natural", "z2_two_orbits", "s3_regular"}) {
      CAPTURE(name);
      auto const x = fixture_gset(name);
      auto const expected = oracle_congruences(x);
      CHECK(congruences_bruteforce(x) == expected);
      CHECK(congruences_principal(x) == expected);
    }
  }

  TEST_CASE("brute force refuses large carriers") {
    auto const z2 = cyclic_group(2);
    auto const reg = coset_action(z2, Subgroup(z2, ElementSet{0}));
    std::vector<GSet> parts(6, reg);
    auto const big = disjoint_union(parts);
    CHECK_THROWS_AS(congruences_bruteforce(big), Error);
  }

  TEST_CASE("principal congruences") {
    auto const x = fixture_gset("z4_regular");
    CHECK(principal_congruence(x, 1, 1) == Partition::identity(4));
    CHECK(principal_congruence(x, 0, 2) == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(principal_congruence(x, 0, 1).is_universal());
    // Principal congruence is the least congruence relating a and b.
    auto const all = oracle_congruences(x);
    for (Element a = 0; a < 4; ++a) {
      for (Element b = 0; b < 4; ++b) {
        auto const theta = principal_congruence(x, a, b);
        for (auto const& c : all) {
          if (c.related(a, b)) CHECK(theta.refines(c));
        }
      }
    }
  }

  TEST_CASE("gset_permutable") {
    CHECK(gset_permutable(fixture_gset("two_fixed_points")).permutable);
    CHECK(gset_permutable(fixture_gset("z4_regular")).permutable);
    CHECK(gset_permutable(fixture_gset("s3_natural")).permutable);
    auto const s3 = gset_permutable(fixture_gset("s3_regular"));
    CHECK_FALSE(s3.permutable);
    CHECK(s3.witness.has_value());

    auto const v = gset_permutable(fixture_gset("z2_two_orbits"));
    CHECK_FALSE(v.permutable);
    REQUIRE(v.witness);
    CHECK(to_string(v.witness->alpha) == "{{0,1},{2},{3}}");
    CHECK(to_string(v.witness->beta) == "{{0,2},{1,3}}");
    CHECK(to_string(v.witness->pair) == "(0,3)");
  }

  TEST_CASE("segregation") {
    CHECK(is_segregated(fixture_gset("two_fixed_points")).segregated);
    CHECK(is_segregated(fixture_gset("s3_regular")).segregated);
    auto const v = is_segregated(fixture_gset("z2_two_orbits"));
    CHECK_FALSE(v.segregated);
    REQUIRE(v.witness);
    CHECK(to_string(v.witness->congruence) == "{{0,2},{1,3}}");
    CHECK_FALSE(describe(*v.witness).empty());
  }

  TEST_CASE("enumerators agree with the partition oracle on the small catalog") {
    for (auto const& inst : catalog(8, 6, 3)) {
      CAPTURE(inst.name);
      auto const expected = oracle_congruences(inst.gset);
      CHECK(congruences_principal(inst.gset) == expected);
      CHECK(congruences_bruteforce(inst.gset) == expected);
    }
  }
}

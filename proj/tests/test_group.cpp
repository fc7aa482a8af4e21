#include <doctest.h>

#include "cpgset/error.hpp"
#include "cpgset/group.hpp"
#include "cpgset/group_library.hpp"
#include "oracles.hpp"

using namespace cpgset;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::FormatError;
}

std::vector<std::size_t> witness_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.witness();
  }
  return {};
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("validate_group accepts Z2") {
    FiniteGroup const g = validate_group({{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.identity() == 0);
    CHECK(g.inverse(1) == 1);
  }

  TEST_CASE("validate_group reports the element without an inverse") {
    auto bad = [] { return validate_group({{0, 1}, {1, 1}}); };
    CHECK(kind_of(bad) == ErrorKind::NoInverse);
    CHECK(witness_of(bad) == std::vector<std::size_t>{1});
  }

  TEST_CASE("validate_group error paths") {
    CHECK(kind_of([] { return validate_group({{0, 1}, {1}}); }) == ErrorKind::NotSquare);
    CHECK(kind_of([] { return validate_group({{0, 2}, {1, 0}}); }) == ErrorKind::NotClosed);
    CHECK(kind_of([] { return validate_group({{1, 1}, {1, 1}}); }) == ErrorKind::NoIdentity);
    // x*y = y: associative (right-zero band) with no two-sided identity.
    CHECK(kind_of([] { return validate_group({{0, 1}, {0, 1}}); }) == ErrorKind::NoIdentity);
    // x*y = x - y mod 3 is not associative; (0,0,1) is the first failing triple.
    auto sub = [] { return validate_group({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}); };
    CHECK(kind_of(sub) == ErrorKind::NotAssociative);
    CHECK(witness_of(sub) == std::vector<std::size_t>{0, 0, 1});
  }

  TEST_CASE("S3 from composed permutations is a group of order 6") {
    auto const table = oracle::perm_table(oracle::all_perms(3));
    FiniteGroup const g = validate_group(table);
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK_FALSE(g.is_abelian());
    CHECK(g == symmetric_group_3());
  }

  TEST_CASE("identity does not have to be element 0") {
    // Z2 with the identity at index 1.
    FiniteGroup const g = validate_group({{1, 0}, {0, 1}});
    CHECK(g.identity() == 1);
    FiniteGroup const c = canonical_group(g);
    CHECK(c.identity() == 0);
    CHECK(c == cyclic_group(2));
  }

  TEST_CASE("subgroup counts") {
    CHECK(subgroups(trivial_group()).size() == 1);
    auto const z4 = cyclic_group(4);
    auto const z4s = subgroups(z4);
    REQUIRE(z4s.size() == 3);
    CHECK(z4s[0].members() == ElementSet{0});
    CHECK(z4s[1].members() == ElementSet{0, 2});
    CHECK(z4s[2].members() == ElementSet{0, 1, 2, 3});

    auto const s3 = symmetric_group_3();
    auto const s3s = subgroups(s3);
    std::vector<std::size_t> sizes;
    for (auto const& h : s3s) sizes.push_back(h.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  }

  TEST_CASE("subgroups agree with the subset-scan oracle on every built-in group") {
    for (auto const& named : builtin_groups()) {
      CAPTURE(named.name);
      auto const oracle_list = oracle::subgroups_by_subset_scan(named.group);
      auto const found = subgroups(named.group);
      REQUIRE(found.size() == oracle_list.size());
      for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].members().bits() == oracle_list[i]);
    }
  }

  TEST_CASE("subgroups reach groups that need three generators") {
    // Z2xZ2xZ2 is not 2-generated; the join step must still find it whole.
    auto const g = builtin_group("Z2xZ2xZ2");
    auto const all = subgroups(g);
    CHECK(all.size() == 16);
    CHECK(all.back().size() == 8);
  }

  TEST_CASE("interval_subgroups") {
    auto const s3 = symmetric_group_3();
    CHECK(interval_subgroups(s3, Subgroup(s3, ElementSet{0})).size() == 6);
    // (23) fixes 0 and swaps 1, 2: image list [0,2,1], element 1.
    Subgroup const h0(s3, ElementSet{0, 1});
    auto const iv = interval_subgroups(s3, h0);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].members() == h0.members());
    CHECK(iv[1].size() == 6);

    auto const z4 = cyclic_group(4);
    auto const iz = interval_subgroups(z4, Subgroup(z4, ElementSet{0, 2}));
    REQUIRE(iz.size() == 2);
    CHECK(iz[0].members() == ElementSet{0, 2});
    CHECK(iz[1].size() == 4);
  }

  TEST_CASE("non-subgroups are rejected") {
    auto const z4 = cyclic_group(4);
    CHECK(kind_of([&] { return Subgroup(z4, ElementSet{0, 1}); }) == ErrorKind::H0NotSubgroup);
    CHECK(kind_of([&] { return Subgroup(z4, ElementSet{1}); }) == ErrorKind::H0NotSubgroup);
    auto const other = cyclic_group(4);
    CHECK(kind_of([&] { return interval_subgroups(z4, Subgroup(other, ElementSet{0})); }) ==
          ErrorKind::H0NotSubgroup);
  }

  TEST_CASE("set_product") {
    auto const s3 = symmetric_group_3();
    Subgroup const h(s3, ElementSet{0, 1});
    CHECK(set_product(h, h) == h.members());

    // <(12)> and <(13)>, products computed by composing the permutations.
    auto const perms = oracle::all_perms(3);
    auto const table = oracle::perm_table(perms);
    Element const t12 = 2;  // [1,0,2]
    Element const t13 = 5;  // [2,1,0]
    REQUIRE(perms[t12] == oracle::Perm{1, 0, 2});
    REQUIRE(perms[t13] == oracle::Perm{2, 1, 0});
    Subgroup const a(s3, ElementSet{0, t12});
    Subgroup const b(s3, ElementSet{0, t13});
    ElementSet ab;
    ElementSet ba;
    for (Element x : {Element{0}, t12}) {
      for (Element y : {Element{0}, t13}) {
        ab.insert(table[x][y]);
        ba.insert(table[y][x]);
      }
    }
    CHECK(ab.size() == 4);
    CHECK(set_product(a, b) == ab);
    CHECK(set_product(b, a) == ba);
    CHECK(set_product(a, b) != set_product(b, a));

    auto const other = symmetric_group_3();
    CHECK(kind_of([&] { return set_product(a, Subgroup(other, ElementSet{0})); }) == ErrorKind::DifferentParents);
  }

  TEST_CASE("abelian groups have commuting subgroup products") {
    for (auto const& named : builtin_groups()) {
      if (!named.group.is_abelian()) continue;
      auto const subs = subgroups(named.group);
      for (auto const& h : subs) {
        for (auto const& k : subs) CHECK(set_product(h, k) == set_product(k, h));
      }
    }
  }

  TEST_CASE("built-in list") {
    auto const groups = builtin_groups();
    CHECK(groups.size() == 14);
    std::size_t abelian = 0;
    for (auto const& g : groups) {
      CHECK(g.group.identity() == 0);
      CHECK(g.group.order() <= 8);
      abelian += g.group.is_abelian() ? 1 : 0;
    }
    CHECK(abelian == 11);
    CHECK(builtin_group("Q8").order() == 8);
    CHECK(subgroups(builtin_group("Q8")).size() == 6);
    CHECK(subgroups(builtin_group("D4")).size() == 10);
    CHECK(kind_of([] { return builtin_group("A5"); }) == ErrorKind::FormatError);
  }
}

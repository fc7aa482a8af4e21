// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cpgset/congruence.hpp"
#include "cpgset/group_library.hpp"
#include "cpgset/io.hpp"
#include "cpgset/semigroup.hpp"
#include "cpgset/theorems.hpp"

using namespace cpgset;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<CatalogInstance> const& default_catalog() {
  static auto const list = catalog(8, 8, 3);
  return list;
}

CatalogInstance const& named(std::string const& name) {
  auto const& list = default_catalog();
  auto it = std::find_if(list.begin(), list.end(), [&](auto const& c) { return c.name == name; });
  if (it == list.end()) throw std::runtime_error("catalog instance " + name + " missing");
  return *it;
}

// Fails the outcome on the first false verdict, reporting its line.
void require_verdict(Outcome& o, VerdictReport const& r) {
  o.require(r.verdict, format_verdict_line(r));
}

Outcome example_reproduction() {
  Outcome o;
  auto const t0 = Clock::now();
  for (auto const& group : {trivial_group(), cyclic_group(2)}) {
    std::size_t const n = group.order();
    GSet const x = validate_gset(group, {std::vector<Element>(n, 0), std::vector<Element>(n, 1)});
    FiniteSemigroup const s = build_gx0(x);
    auto const a = static_cast<Element>(n);
    auto const b = static_cast<Element>(n + 1);
    Element const zero = *s.zero();
    std::vector<Element> g_part(n);
    for (Element i = 0; i < n; ++i) g_part[i] = i;
    Partition const alpha = Partition::from_blocks(s.order(), {{a, zero}, g_part});
    Partition const beta = Partition::from_blocks(s.order(), {{b, zero}, g_part});
    std::string const tag = " (|G|=" + std::to_string(n) + ")";
    o.require(gset_permutable(x).permutable, "X not permutable" + tag);
    o.require(is_sg_congruence(s, alpha), "alpha not a congruence" + tag);
    o.require(is_sg_congruence(s, beta), "beta not a congruence" + tag);
    o.require(compose(alpha, beta).contains(a, b), "(a,b) missing from alpha.beta" + tag);
    o.require(!compose(beta, alpha).contains(a, b), "(a,b) present in beta.alpha" + tag);
    o.require(!sg_permutable(s).permutable, "semigroup permutable" + tag);
  }
  for (auto const& r : reproduce_example()) require_verdict(o, r);
  double const secs = seconds_since(t0);
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "trivial G and Z2, %.3f ms", secs * 1000.0);
    o.detail = buf;
  }
  return o;
}

Outcome theorem1() {
  Outcome o;
  auto const t0 = Clock::now();
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  for (auto const& inst : default_catalog()) {
    auto const r = verify_thm1(inst.gset, inst.name);
    require_verdict(o, r);
    (*r.lhs ? both_true : both_false) += 1;
  }
  double const secs = seconds_since(t0);
  o.require(both_true > 0 && both_false > 0, "one side never varies");
  o.require(secs < 300.0, "took " + std::to_string(secs) + " s");
  if (o.ok) {
    o.detail = std::to_string(default_catalog().size()) + " instances, " + std::to_string(both_true) + " true, " +
               std::to_string(both_false) + " false, " + std::to_string(static_cast<int>(secs)) + " s";
  }
  return o;
}

Outcome lemma1() {
  Outcome o;
  std::size_t checked = 0;
  for (auto const& inst : default_catalog()) {
    if (inst.orbit_count != 1) continue;
    for (Element p = 0; p < inst.gset.carrier_size(); ++p) {
      require_verdict(o, verify_lemma1(inst.gset, p, inst.name));
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (instance, base point) pairs";
  return o;
}

Outcome lemma2() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t falses = 0;
  for (auto const& inst : default_catalog()) {
    if (inst.orbit_count != 1) continue;
    std::optional<bool> first;
    for (Element p = 0; p < inst.gset.carrier_size(); ++p) {
      auto const r = verify_lemma2(inst.gset, p, inst.name);
      require_verdict(o, r);
      if (!first) first = *r.lhs;
      o.require(*r.lhs == *first, inst.name + ": verdict depends on base point");
      ++checked;
    }
    falses += *first ? 0 : 1;
  }
  auto const s3 = verify_lemma2(named("S3[{0}]").gset, 0);
  o.require(s3.verdict && !*s3.lhs && !*s3.rhs, "S3 regular is not a false case");
  auto const z4 = verify_lemma2(named("Z4[{0}]").gset, 0);
  o.require(z4.verdict && *z4.lhs && *z4.rhs, "Z4 regular is not a true case");
  if (o.ok) {
    o.detail = std::to_string(checked) + " (instance, base point) pairs, " + std::to_string(falses) +
               " non-permutable instances incl. S3 regular; Z4 regular true";
  }
  return o;
}

Outcome lemma3_thm6() {
  Outcome o;
  std::size_t count = 0;
  for (auto const& inst : default_catalog()) {
    require_verdict(o, verify_lemma3(inst.gset, inst.name));
    require_verdict(o, verify_thm6(inst.gset, inst.name));
    ++count;
  }
  GSet const& z2 = named("Z2[{0}+{0}]").gset;
  auto const l3 = verify_lemma3(z2);
  auto const t6 = verify_thm6(z2);
  o.require(l3.verdict && !*l3.lhs && !*l3.rhs, "Z2 two-orbit lemma3 sides not both false");
  o.require(t6.verdict && !*t6.lhs && !*t6.rhs, "Z2 two-orbit thm6 sides not both false");
  auto const seg = is_segregated(z2);
  Partition const expected = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  o.require(!seg.segregated && seg.witness && seg.witness->congruence == expected,
            "Z2 two-orbit witness is not {{a1,b1},{a2,b2}}");
  if (o.ok) {
    o.detail = std::to_string(count) + " instances; Z2 two-orbit false with witness " + to_string(expected);
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto const t0 = Clock::now();
  std::size_t gsets = 0;
  std::size_t semigroups = 0;
  for (auto const& inst : catalog(8, 10, 10)) {
    ++gsets;
    o.require(congruences_bruteforce(inst.gset) == congruences_principal(inst.gset), inst.name + ": G-set enumerators");
    FiniteSemigroup const s = build_gx0(inst.gset);
    if (s.order() <= 10) {
      ++semigroups;
      o.require(sg_congruences_bruteforce(s) == sg_congruences_principal(s), inst.name + ": semigroup enumerators");
    }
  }
  for (auto const& inst : default_catalog()) {
    for (auto const& part : orbit_subsemigroups(inst.gset)) {
      if (part.order() > 10) continue;
      ++semigroups;
      o.require(sg_congruences_bruteforce(part) == sg_congruences_principal(part),
                inst.name + ": orbit subsemigroup enumerators");
    }
  }
  if (o.ok) {
    o.detail = std::to_string(gsets) + " G-sets, " + std::to_string(semigroups) + " semigroups, " +
               std::to_string(static_cast<int>(seconds_since(t0))) + " s";
  }
  return o;
}

Outcome proof_facts() {
  Outcome o;
  std::size_t instances = 0;
  std::size_t congruences = 0;
  for (auto const& inst : default_catalog()) {
    if (inst.orbit_count != 1 || !gset_permutable(inst.gset).permutable) continue;
    ++instances;
    FiniteSemigroup const s = build_gx0(inst.gset);
    std::size_t const n = inst.gset.group().order();
    Element const zero = *s.zero();
    ElementSet n_part;
    for (Element i = static_cast<Element>(n); i < s.order(); ++i) n_part.insert(i);
    for (Partition const& c : sg_congruences(s)) {
      if (c.is_universal()) continue;
      ++congruences;
      ElementSet zero_class;
      for (Element e : c.block_of(zero)) zero_class.insert(e);
      o.require(zero_class == ElementSet{zero} || zero_class == n_part,
                inst.name + ": 0-class of " + to_string(c));
      for (Element g = 0; g < n; ++g) {
        for (Element e : c.block_of(g)) o.require(e < n, inst.name + ": G-part not saturated in " + to_string(c));
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(instances) + " transitive permutable instances, " + std::to_string(congruences) +
               " non-universal congruences";
  }
  return o;
}

Outcome ideal_chain() {
  Outcome o;
  std::vector<FiniteSemigroup> corpus;
  for (auto const& inst : default_catalog()) {
    corpus.push_back(build_gx0(inst.gset));
    for (auto& part : orbit_subsemigroups(inst.gset)) corpus.push_back(std::move(part));
  }
  std::size_t permutable = 0;
  for (auto const& s : corpus) {
    if (!sg_permutable(s).permutable) continue;
    ++permutable;
    auto const v = ideals_form_chain(s);
    o.require(v.chain, "permutable semigroup with incomparable ideals:\n" + serialize(s));
  }
  GSet const ex = validate_gset(trivial_group(), {{0}, {1}});
  auto const v = ideals_form_chain(build_gx0(ex));
  // e=0, a=1, b=2, zero=3
  o.require(!v.chain && v.witness && v.witness->first == ElementSet{1, 3} && v.witness->second == ElementSet{2, 3},
            "example semigroup witness is not ({a,0},{b,0})");
  if (o.ok) {
    o.detail = std::to_string(corpus.size()) + " semigroups, " + std::to_string(permutable) +
               " permutable; example witness ({a,0},{b,0})";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  auto run = [](int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run({"verify", "all"}, out, err);
    return out.str();
  };
  int c1 = 0;
  int c2 = 0;
  std::string const first = run(c1);
  std::string const second = run(c2);
  o.require(c1 == cli::exit_ok && c2 == cli::exit_ok, "verify all exited nonzero");
  o.require(first == second, "reports differ");
  o.require(first.find("status=PASS") != std::string::npos, "report status is not PASS");
  if (o.ok) o.detail = "two runs of verify all, " + std::to_string(first.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* name;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> const criteria = {
      {1, "example reproduction", example_reproduction},
      {2, "thm1 equivalence over the catalog", theorem1},
      {3, "lemma1 bijection", lemma1},
      {4, "lemma2 equivalence", lemma2},
      {5, "lemma3 / thm6 equivalence", lemma3_thm6},
      {6, "enumerator oracle equivalence", oracle_equivalence},
      {7, "proof-fact properties", proof_facts},
      {8, "ideal-chain property", ideal_chain},
      {9, "report determinism", determinism},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %s: %s (%s)\n", c.id, c.name, o.ok ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("acceptance: %d/%zu passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

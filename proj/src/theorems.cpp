#include "cpgset/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "cpgset/congruence.hpp"
#include "cpgset/error.hpp"
#include "cpgset/group_library.hpp"
#include "cpgset/io.hpp"
#include "cpgset/semigroup.hpp"

namespace cpgset {

std::string_view claim_id(Claim c) noexcept {
  switch (c) {
    case Claim::Lemma1: return "lemma1";
    case Claim::Lemma2: return "lemma2";
    case Claim::Lemma3: return "lemma3";
    case Claim::Thm1: return "thm1";
    case Claim::Thm6: return "thm6";
    case Claim::IdealChain: return "ideal_chain";
    case Claim::Example: return "example";
  }
  return "unknown";
}

std::optional<Claim> parse_claim(std::string_view id) noexcept {
  for (Claim c : all_claims) {
    if (claim_id(c) == id) return c;
  }
  return std::nullopt;
}

std::string format_verdict_line(VerdictReport const& r) {
  std::ostringstream out;
  out << r.claim_id << ' ' << r.instance << ' ' << (r.verdict ? "PASS" : "FAIL");
  auto flag = [](bool b) { return b ? "true" : "false"; };
  if (r.lhs) out << " lhs=" << flag(*r.lhs);
  if (r.rhs) out << " rhs=" << flag(*r.rhs);
  out << " congruences=" << r.stats.congruences << " pairs=" << r.stats.pairs_checked;
  if (r.witness) out << " witness: " << *r.witness;
  return out.str();
}

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerdictReport start_report(Claim claim, GSet const& x, std::string_view instance) {
  VerdictReport r;
  r.claim_id = std::string(claim_id(claim));
  r.instance = instance.empty() ? serialize_inline(x) : std::string(instance);
  return r;
}

// Closes out a two-sided report: the verdict is agreement of the sides.
void settle(VerdictReport& r, bool lhs, bool rhs, std::string const& detail, GSet const& x, Stopwatch const& clock) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = lhs == rhs && detail.empty();
  if (!r.verdict) {
    std::string w = detail.empty() ? "sides disagree" : detail;
    w += " instance=" + serialize_inline(x);
    r.witness = std::move(w);
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
}

void fail(VerdictReport& r, std::string const& what, GSet const& x) {
  if (!r.verdict) return;
  r.verdict = false;
  r.witness = what + " instance=" + serialize_inline(x);
}

void require_transitive(GSet const& x) {
  if (!is_transitive(x)) throw Error(ErrorKind::NotTransitive, {}, "G-set is not transitive");
}

bool all_products_commute(std::vector<Subgroup> const& interval, std::string* witness) {
  for (std::size_t i = 0; i < interval.size(); ++i) {
    for (std::size_t j = i + 1; j < interval.size(); ++j) {
      if (set_product(interval[i], interval[j]) != set_product(interval[j], interval[i])) {
        if (witness != nullptr) {
          *witness = "H=" + to_string(interval[i].members()) + " K=" + to_string(interval[j].members());
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerdictReport verify_lemma1(GSet const& x, Element base_point, std::string_view instance) {
  require_transitive(x);
  Stopwatch clock;
  VerdictReport r = start_report(Claim::Lemma1, x, instance);
  FiniteGroup const& g = x.group();
  std::size_t const n = g.order();
  auto const cons = congruences_principal(x);
  Subgroup const stab = stabilizer(x, base_point);
  auto const interval = interval_subgroups(g, stab);
  r.stats.congruences = cons.size();
  std::string const at = " at x=" + std::to_string(base_point);

  if (cons.size() != interval.size()) {
    fail(r, "|Con|=" + std::to_string(cons.size()) + " |interval|=" + std::to_string(interval.size()) + at, x);
  }

  auto in_interval = [&](ElementSet s) {
    return std::any_of(interval.begin(), interval.end(), [&](Subgroup const& k) { return k.members() == s; });
  };
  auto in_con = [&](Partition const& p) { return std::binary_search(cons.begin(), cons.end(), p); };

  // alpha -> H_alpha
  auto phi = [&](Partition const& alpha) {
    ElementSet h;
    for (Element e = 0; e < n; ++e) {
      if (alpha.related(x.act(base_point, e), base_point)) h.insert(e);
    }
    return h;
  };
  // H -> alpha_H; x^a and x^b share a block iff Ha = Hb. nullopt when the
  // labelling is not well defined.
  auto psi = [&](ElementSet h) -> std::optional<Partition> {
    std::vector<Element> labels(x.carrier_size(), static_cast<Element>(n));
    for (Element a = 0; a < n; ++a) {
      Element coset_min = static_cast<Element>(n);
      for (Element k : h.members()) coset_min = std::min(coset_min, g.product(k, a));
      Element& slot = labels[x.act(base_point, a)];
      if (slot != n && slot != coset_min) return std::nullopt;
      slot = coset_min;
    }
    return Partition::from_labels(labels);
  };

  std::vector<ElementSet> phi_image;
  for (Partition const& alpha : cons) {
    ElementSet const h = phi(alpha);
    phi_image.push_back(h);
    if (!in_interval(h)) fail(r, "phi(" + to_string(alpha) + ")=" + to_string(h) + " not in interval" + at, x);
    auto const back = psi(h);
    if (!back || *back != alpha) fail(r, "psi(phi(" + to_string(alpha) + ")) != alpha" + at, x);
  }
  std::vector<Partition> psi_image;
  for (Subgroup const& k : interval) {
    auto const alpha = psi(k.members());
    if (!alpha) {
      fail(r, "psi(" + to_string(k.members()) + ") not well defined" + at, x);
      continue;
    }
    psi_image.push_back(*alpha);
    if (!is_congruence(x, *alpha) || !in_con(*alpha)) {
      fail(r, "psi(" + to_string(k.members()) + ")=" + to_string(*alpha) + " not a congruence" + at, x);
    }
    if (phi(*alpha) != k.members()) fail(r, "phi(psi(" + to_string(k.members()) + ")) != H" + at, x);
  }
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = 0; j < cons.size(); ++j) {
      ++r.stats.pairs_checked;
      if (cons[i].refines(cons[j]) != phi_image[i].is_subset_of(phi_image[j])) {
        fail(r, "phi not order preserving on " + to_string(cons[i]) + ", " + to_string(cons[j]) + at, x);
      }
    }
  }
  if (psi_image.size() == interval.size()) {
    for (std::size_t i = 0; i < interval.size(); ++i) {
      for (std::size_t j = 0; j < interval.size(); ++j) {
        ++r.stats.pairs_checked;
        if (interval[i].members().is_subset_of(interval[j].members()) != psi_image[i].refines(psi_image[j])) {
          fail(r,
               "psi not order preserving on " + to_string(interval[i].members()) + ", " +
                   to_string(interval[j].members()) + at,
               x);
        }
      }
    }
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerdictReport verify_lemma1_all_points(GSet const& x, std::string_view instance) {
  Stopwatch clock;
  VerdictReport total;
  for (Element p = 0; p < x.carrier_size(); ++p) {
    VerdictReport r = verify_lemma1(x, p, instance);
    if (p == 0) {
      total = r;
    } else {
      total.stats.pairs_checked += r.stats.pairs_checked;
    }
    if (!r.verdict) {
      r.stats.elapsed_ms = clock.elapsed_ms();
      return r;
    }
  }
  total.stats.elapsed_ms = clock.elapsed_ms();
  return total;
}

VerdictReport verify_lemma2(GSet const& x, Element base_point, std::string_view instance) {
  require_transitive(x);
  Stopwatch clock;
  VerdictReport r = start_report(Claim::Lemma2, x, instance);

  PermutabilityVerdict const direct = gset_permutable(x);
  r.stats.congruences = direct.congruences;
  r.stats.pairs_checked = direct.pairs_checked;

  FiniteGroup const& g = x.group();
  auto subgroup_side = [&](Element p, std::string* witness) {
    Subgroup const stab = stabilizer(x, p);
    return all_products_commute(interval_subgroups(g, stab), witness);
  };
  std::string product_witness;
  bool const products = subgroup_side(base_point, &product_witness);
  std::string detail;
  for (Element p = 0; p < x.carrier_size(); ++p) {
    if (subgroup_side(p, nullptr) != products) {
      detail = "subgroup criterion differs between x=" + std::to_string(base_point) + " and x=" + std::to_string(p);
      break;
    }
  }
  if (detail.empty() && direct.permutable != products) {
    detail = "permutable=" + std::string(direct.permutable ? "true" : "false") +
             " products_commute=" + std::string(products ? "true" : "false");
    if (direct.witness) detail += " congruence witness " + describe(*direct.witness);
    if (!product_witness.empty()) detail += " subgroup witness " + product_witness;
  }
  settle(r, direct.permutable, products, detail, x, clock);
  return r;
}

VerdictReport verify_lemma3(GSet const& x, std::string_view instance) {
  Stopwatch clock;
  VerdictReport r = start_report(Claim::Lemma3, x, instance);
  PermutabilityVerdict const direct = gset_permutable(x);
  r.stats.congruences = direct.congruences;
  r.stats.pairs_checked = direct.pairs_checked;

  auto const d = orbits(x);
  SegregationVerdict const seg = is_segregated(x);
  bool each_orbit = true;
  for (std::size_t i = 0; i < d.size() && each_orbit; ++i) {
    auto const v = gset_permutable(orbit_gset(x, d, i));
    r.stats.pairs_checked += v.pairs_checked;
    each_orbit = v.permutable;
  }
  bool const characterization = seg.segregated && d.size() <= 2 && each_orbit;
  std::string detail;
  if (direct.permutable != characterization) {
    detail = "segregated=" + std::string(seg.segregated ? "true" : "false") + " orbits=" + std::to_string(d.size()) +
             " orbits_permutable=" + std::string(each_orbit ? "true" : "false");
    if (direct.witness) detail += " congruence witness " + describe(*direct.witness);
  }
  settle(r, direct.permutable, characterization, detail, x, clock);
  return r;
}

VerdictReport verify_thm1(GSet const& x, std::string_view instance) {
  Stopwatch clock;
  VerdictReport r = start_report(Claim::Thm1, x, instance);
  bool const transitive = is_transitive(x);
  bool gset_side = false;
  if (transitive) {
    PermutabilityVerdict const direct = gset_permutable(x);
    gset_side = direct.permutable;
  }

  FiniteSemigroup const s = build_gx0(x);
  auto const cons = sg_congruences(s);
  PermutabilityVerdict const semigroup_side = all_pairs_permute(cons);
  r.stats.congruences = cons.size();
  r.stats.pairs_checked = semigroup_side.pairs_checked;

  std::string detail;
  if (gset_side) {
    // Facts about the congruences of (G,X,0) for transitive permutable X.
    ElementSet n_part;
    for (Element i = 0; i < s.order(); ++i) {
      if (s.role(i).kind != RoleKind::GroupPart) n_part.insert(i);
    }
    Element const zero = *s.zero();
    for (Partition const& c : cons) {
      if (c.is_universal()) continue;
      ElementSet zero_class;
      for (Element e : c.block_of(zero)) zero_class.insert(e);
      if (zero_class != ElementSet{zero} && zero_class != n_part) {
        detail = "zero class " + to_string(zero_class) + " of " + to_string(c) + " is neither {0} nor N";
        break;
      }
      bool group_closed = true;
      for (Element i = 0; i < s.order() && group_closed; ++i) {
        if (s.role(i).kind != RoleKind::GroupPart) continue;
        for (Element j : c.block_of(i)) group_closed = group_closed && s.role(j).kind == RoleKind::GroupPart;
      }
      if (!group_closed) {
        detail = "congruence " + to_string(c) + " mixes group and non-group elements";
        break;
      }
    }
  }
  if (detail.empty() && gset_side != semigroup_side.permutable) {
    detail = "transitive=" + std::string(transitive ? "true" : "false");
    if (semigroup_side.witness) detail += " semigroup witness " + describe(*semigroup_side.witness);
  }
  settle(r, gset_side, semigroup_side.permutable, detail, x, clock);
  return r;
}

VerdictReport verify_thm6(GSet const& x, std::string_view instance) {
  Stopwatch clock;
  VerdictReport r = start_report(Claim::Thm6, x, instance);
  PermutabilityVerdict const direct = gset_permutable(x);

  SegregationVerdict const seg = sg_segregated(x);
  auto const parts = orbit_subsemigroups(x);
  bool each = true;
  for (std::size_t i = 0; i < parts.size() && each; ++i) {
    auto const v = sg_permutable(parts[i]);
    r.stats.congruences += v.congruences;
    r.stats.pairs_checked += v.pairs_checked;
    each = v.permutable;
  }
  bool const characterization = seg.segregated && parts.size() <= 2 && each;
  std::string detail;
  if (direct.permutable != characterization) {
    detail = "sg_segregated=" + std::string(seg.segregated ? "true" : "false") +
             " orbit_subsemigroups=" + std::to_string(parts.size()) +
             " all_permutable=" + std::string(each ? "true" : "false");
    if (seg.witness) detail += " segregation witness " + describe(*seg.witness);
  }
  settle(r, direct.permutable, characterization, detail, x, clock);
  return r;
}

VerdictReport verify_ideal_chain(GSet const& x, std::string_view instance) {
  Stopwatch clock;
  VerdictReport r = start_report(Claim::IdealChain, x, instance);
  FiniteSemigroup const s = build_gx0(x);
  PermutabilityVerdict const perm = sg_permutable(s);
  ChainVerdict const chain = ideals_form_chain(s);
  r.stats.congruences = perm.congruences;
  r.stats.pairs_checked = perm.pairs_checked;
  r.lhs = perm.permutable;
  r.rhs = chain.chain;
  if (perm.permutable && !chain.chain) {
    r.verdict = false;
    r.witness = "incomparable ideals " + to_string(chain.witness->first) + " " + to_string(chain.witness->second) +
                " instance=" + serialize_inline(x);
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerdictReport reproduce_example(FiniteGroup const& group, std::string_view instance) {
  Stopwatch clock;
  std::size_t const n = group.order();
  GSet const x = validate_gset(group, {std::vector<Element>(n, 0), std::vector<Element>(n, 1)});
  VerdictReport r = start_report(Claim::Example, x, instance);

  FiniteSemigroup const s = build_gx0(x);
  auto const a = static_cast<Element>(n);
  auto const b = static_cast<Element>(n + 1);
  Element const zero = *s.zero();
  std::vector<Element> group_part(n);
  for (Element i = 0; i < n; ++i) group_part[i] = i;
  Partition const alpha = Partition::from_blocks(s.order(), {{a, zero}, group_part});
  Partition const beta = Partition::from_blocks(s.order(), {{b, zero}, group_part});

  PermutabilityVerdict const gset_perm = gset_permutable(x);
  PermutabilityVerdict const sg_perm = sg_permutable(s);
  r.stats.congruences = sg_perm.congruences;
  r.stats.pairs_checked = sg_perm.pairs_checked;

  Partition const id = Partition::identity(s.order());
  r.checks = {
      {"gset_permutable", gset_perm.permutable},
      {"alpha_and_beta_are_congruences", is_sg_congruence(s, alpha) && is_sg_congruence(s, beta)},
      {"ab_in_alpha_beta", compose(alpha, beta).contains(a, b)},
      {"ab_not_in_beta_alpha", !compose(beta, alpha).contains(a, b)},
      {"semigroup_not_permutable", !sg_perm.permutable},
      {"identity_control", !compose(id, id).contains(a, b)},
  };
  for (auto const& [name, ok] : r.checks) {
    if (!ok) fail(r, "assertion " + name + " failed", x);
  }
  r.stats.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<VerdictReport> reproduce_example() {
  return {reproduce_example(trivial_group(), "Z1[example]"), reproduce_example(cyclic_group(2), "Z2[example]")};
}

std::size_t SuiteSummary::failures() const {
  std::size_t total = 0;
  for (auto const& [claim, t] : totals) total += t.failed;
  return total;
}

SuiteSummary run_catalog_suite(SuiteBounds const& bounds, std::vector<Claim> const& claims) {
  auto check = [](std::size_t value, std::size_t limit, char const* what) {
    if (value == 0 || value > limit) {
      throw Error(ErrorKind::BoundsExceeded, {value, limit},
                  std::string(what) + " must be between 1 and " + std::to_string(limit));
    }
  };
  check(bounds.max_group_order, suite_limits.max_group_order, "max group order");
  check(bounds.max_carrier, suite_limits.max_carrier, "max carrier");
  check(bounds.max_orbits, suite_limits.max_orbits, "max orbits");

  SuiteSummary summary;
  summary.bounds = bounds;
  if (claims.empty()) return summary;

  std::vector<Claim> ordered;
  for (Claim c : all_claims) {
    if (std::find(claims.begin(), claims.end(), c) != claims.end()) ordered.push_back(c);
  }
  auto const instances = catalog(bounds.max_group_order, bounds.max_carrier, bounds.max_orbits);
  for (Claim c : ordered) {
    ClaimTotals totals;
    auto record = [&](VerdictReport r) {
      ++totals.run;
      if (r.verdict) ++totals.passed;
      else ++totals.failed;
      summary.reports.push_back(std::move(r));
    };
    if (c == Claim::Example) {
      for (auto& r : reproduce_example()) record(std::move(r));
    } else {
      for (CatalogInstance const& inst : instances) {
        bool const transitive = inst.orbit_count == 1;
        switch (c) {
          case Claim::Lemma1:
            if (transitive) record(verify_lemma1_all_points(inst.gset, inst.name));
            break;
          case Claim::Lemma2:
            if (transitive) record(verify_lemma2(inst.gset, 0, inst.name));
            break;
          case Claim::Lemma3: record(verify_lemma3(inst.gset, inst.name)); break;
          case Claim::Thm1: record(verify_thm1(inst.gset, inst.name)); break;
          case Claim::Thm6: record(verify_thm6(inst.gset, inst.name)); break;
          case Claim::IdealChain: record(verify_ideal_chain(inst.gset, inst.name)); break;
          case Claim::Example: break;
        }
      }
    }
    summary.totals.emplace_back(c, totals);
  }
  return summary;
}

std::string format_report(SuiteSummary const& summary) {
  std::ostringstream out;
  for (VerdictReport const& r : summary.reports) out << format_verdict_line(r) << '\n';
  out << "[summary]\n";
  out << "bounds max_group=" << summary.bounds.max_group_order << " max_carrier=" << summary.bounds.max_carrier
      << " max_orbits=" << summary.bounds.max_orbits << '\n';
  ClaimTotals all;
  for (auto const& [claim, t] : summary.totals) {
    out << "claim=" << claim_id(claim) << " run=" << t.run << " pass=" << t.passed << " fail=" << t.failed << '\n';
    all.run += t.run;
    all.passed += t.passed;
    all.failed += t.failed;
  }
  out << "total run=" << all.run << " pass=" << all.passed << " fail=" << all.failed << '\n';
  out << "status=" << (all.failed == 0 ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace cpgset

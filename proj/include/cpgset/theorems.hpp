#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpgset/gset.hpp"

namespace cpgset {

enum class Claim { Lemma1, Lemma2, Lemma3, Thm1, Thm6, IdealChain, Example };

inline constexpr Claim all_claims[] = {Claim::Lemma1, Claim::Lemma2,     Claim::Lemma3, Claim::Thm1,
                                       Claim::Thm6,   Claim::IdealChain, Claim::Example};

std::string_view claim_id(Claim c) noexcept;
std::optional<Claim> parse_claim(std::string_view id) noexcept;

struct VerdictStats {
  std::size_t congruences = 0;
  std::size_t pairs_checked = 0;
  // Wall-clock time; deliberately left out of serialized reports.
  double elapsed_ms = 0.0;
};

// Outcome of one verifier on one instance. verdict is false exactly when a
// witness is present. For the "iff" claims lhs/rhs record the two sides,
// each computed on its own code path.
struct VerdictReport {
  std::string claim_id;
  std::string instance;
  bool verdict = true;
  std::optional<std::string> witness;
  VerdictStats stats;
  std::optional<bool> lhs;
  std::optional<bool> rhs;
  // Named sub-assertions, in evaluation order (used by the Example claim).
  std::vector<std::pair<std::string, bool>> checks;
};

// One line: "<claim> <instance> PASS|FAIL [lhs=.. rhs=..] congruences=.. pairs=.. [witness: ..]".
std::string format_verdict_line(VerdictReport const& r);

// Con(X) against [Stab(x), G] through H_alpha = {g : (x^g, x) in alpha} and
// alpha_H = {(x^g, x^h) : Hg = Hh}: both maps land in the right place, are
// mutually inverse and preserve order. Throws NotTransitive.
VerdictReport verify_lemma1(GSet const& x, Element base_point, std::string_view instance = {});
// verify_lemma1 at every base point; the first failure wins.
VerdictReport verify_lemma1_all_points(GSet const& x, std::string_view instance = {});

// Permutability of X against HK = KH over the interval [Stab(x), G], with
// the subgroup side recomputed at every base point. Throws NotTransitive.
VerdictReport verify_lemma2(GSet const& x, Element base_point, std::string_view instance = {});

// Permutability of X against: segregated, at most two orbits, and every
// orbit permutable.
VerdictReport verify_lemma3(GSet const& x, std::string_view instance = {});

// (transitive and permutable) against permutability of (G,X,0). On the
// transitive permutable side, also checks that every non-universal
// congruence of (G,X,0) keeps group elements among group elements and has
// zero class {0} or X u {0}.
VerdictReport verify_thm1(GSet const& x, std::string_view instance = {});

// Permutability of X against: (G,X,0) segregated, at most two orbit
// subsemigroups, each of them permutable.
VerdictReport verify_thm6(GSet const& x, std::string_view instance = {});

// When (G,X,0) is congruence permutable its ideals form a chain.
VerdictReport verify_ideal_chain(GSet const& x, std::string_view instance = {});

// The two-fixed-point G-set {a, b}: X permutes, the congruences
// {a,0}|{b}|G and {b,0}|{a}|G of (G,X,0) exist, (a,b) is in the first
// composite but not the second, and (G,X,0) does not permute. Also runs
// the identity/identity control.
VerdictReport reproduce_example(FiniteGroup const& group, std::string_view instance = {});
// Runs the trivial group and Z2; verdict true when both pass.
std::vector<VerdictReport> reproduce_example();

struct SuiteBounds {
  std::size_t max_group_order = 8;
  std::size_t max_carrier = 8;
  std::size_t max_orbits = 3;
};

// Desk-scale ceilings; run_catalog_suite throws BoundsExceeded past them.
inline constexpr SuiteBounds suite_limits{8, 12, 4};

struct ClaimTotals {
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SuiteSummary {
  SuiteBounds bounds;
  // Claim-major, catalog order within a claim.
  std::vector<VerdictReport> reports;
  std::vector<std::pair<Claim, ClaimTotals>> totals;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

SuiteSummary run_catalog_suite(SuiteBounds const& bounds, std::vector<Claim> const& claims);

// Verdict lines, then a "[summary]" block of key=value lines.
std::string format_report(SuiteSummary const& summary);

}  // namespace cpgset

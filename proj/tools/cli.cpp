#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "cpgset/congruence.hpp"
#include "cpgset/error.hpp"
#include "cpgset/io.hpp"
#include "cpgset/semigroup.hpp"
#include "cpgset/theorems.hpp"

namespace cpgset::cli {

namespace {

char const* flag(bool b) { return b ? "true" : "false"; }

void print_partitions(std::ostream& out, std::vector<Partition> const& list) {
  for (Partition const& p : list) out << to_string(p) << '\n';
  out << "count=" << list.size() << '\n';
}

// Lists the principal-closure result and cross-checks it against the
// brute-force enumerator whenever the carrier is small enough.
int report_congruences(std::ostream& out, std::vector<Partition> const& principal, std::size_t carrier,
                       std::function<std::vector<Partition>()> const& bruteforce) {
  print_partitions(out, principal);
  if (carrier > default_bruteforce_cutoff) {
    out << "bruteforce=skipped principal=" << principal.size() << '\n';
    return exit_ok;
  }
  auto const brute = bruteforce();
  bool const agree = brute == principal;
  out << "bruteforce=" << brute.size() << " principal=" << principal.size() << " agree=" << flag(agree) << '\n';
  return agree ? exit_ok : exit_verdict_fail;
}

int report_permutability(std::ostream& out, PermutabilityVerdict const& v) {
  out << "permutable=" << flag(v.permutable) << " congruences=" << v.congruences << " pairs=" << v.pairs_checked
      << '\n';
  if (v.witness) out << "witness: " << describe(*v.witness) << '\n';
  return v.permutable ? exit_ok : exit_verdict_fail;
}

GSet load_gset(std::string const& path) { return parse_gset(read_file(path)); }
FiniteSemigroup load_semigroup(std::string const& path) { return parse_semigroup(read_file(path)); }

int cmd_validate(std::string const& path, std::ostream& out) {
  std::string const text = read_file(path);
  FileKind const kind = detect_kind(text);
  char const* const name = kind == FileKind::Group ? "group" : kind == FileKind::GSet ? "gset" : "semigroup";
  try {
    switch (kind) {
      case FileKind::Group: {
        FiniteGroup const g = parse_group(text);
        out << "group: valid order=" << g.order() << " identity=" << g.identity() << " abelian=" << flag(g.is_abelian())
            << '\n';
        break;
      }
      case FileKind::GSet: {
        GSet const x = parse_gset(text);
        auto const d = orbits(x);
        out << "gset: valid carrier=" << x.carrier_size() << " group_order=" << x.group().order()
            << " orbits=" << d.size() << " transitive=" << flag(d.size() == 1) << '\n';
        break;
      }
      case FileKind::Semigroup: {
        FiniteSemigroup const s = parse_semigroup(text);
        out << "semigroup: valid order=" << s.order();
        if (s.zero()) out << " zero=" << *s.zero();
        else out << " zero=none";
        out << " roles=" << flag(s.has_roles()) << '\n';
        break;
      }
    }
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::FormatError) throw;
    out << name << ": invalid " << e.summary() << '\n';
    return exit_verdict_fail;
  }
  return exit_ok;
}

int cmd_verify(std::string const& claim, SuiteBounds const& bounds, std::ostream& out, std::ostream& err) {
  std::vector<Claim> claims;
  if (claim == "all") {
    claims.assign(std::begin(all_claims), std::end(all_claims));
  } else if (auto c = parse_claim(claim)) {
    claims.push_back(*c);
  } else {
    err << "error: unknown claim '" << claim << "'\n";
    return exit_usage;
  }
  SuiteSummary const summary = run_catalog_suite(bounds, claims);
  out << format_report(summary);
  return summary.ok() ? exit_ok : exit_verdict_fail;
}

int cmd_example(std::ostream& out) {
  bool ok = true;
  for (VerdictReport const& r : reproduce_example()) {
    for (auto const& [name, passed] : r.checks) {
      out << "example " << r.instance << ' ' << name << ' ' << (passed ? "PASS" : "FAIL") << '\n';
    }
    out << format_verdict_line(r) << '\n';
    ok = ok && r.verdict;
  }
  out << "status=" << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? exit_ok : exit_verdict_fail;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Congruence permutability toolkit for finite G-sets and (G,X,0) semigroups", "cpgset"};
  app.require_subcommand(1);

  std::string file;
  std::function<int()> action;

  auto with_file = [&](char const* name, char const* help, char const* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, what)->required();
    return sub;
  };

  with_file("validate", "Validate a group, gset or semigroup file (kind taken from its header)", "input file")
      ->callback([&] { action = [&] { return cmd_validate(file, out); }; });

  with_file("orbits", "Orbit decomposition of a G-set", "gset file")->callback([&] {
    action = [&] {
      auto const d = orbits(load_gset(file));
      out << "orbits=" << d.size() << " transitive=" << flag(d.size() == 1) << '\n';
      for (auto const& block : d.blocks) out << format_set(block) << '\n';
      return exit_ok;
    };
  });

  Element point = 0;
  auto* stab = with_file("stabilizer", "Stabilizer subgroup of a point", "gset file");
  stab->add_option("point", point, "carrier point")->required();
  stab->callback([&] {
    action = [&] {
      GSet const x = load_gset(file);
      Subgroup const h = stabilizer(x, point);
      out << "stabilizer point=" << point << " order=" << h.size() << " members=" << to_string(h.members()) << '\n';
      return exit_ok;
    };
  });

  with_file("congruences", "List the congruences of a G-set", "gset file")->callback([&] {
    action = [&] {
      GSet const x = load_gset(file);
      return report_congruences(out, congruences_principal(x), x.carrier_size(),
                                [&] { return congruences_bruteforce(x); });
    };
  });

  with_file("permutable", "Congruence permutability of a G-set", "gset file")->callback([&] {
    action = [&] { return report_permutability(out, gset_permutable(load_gset(file))); };
  });

  with_file("segregated", "Segregation of a G-set", "gset file")->callback([&] {
    action = [&] {
      SegregationVerdict const v = is_segregated(load_gset(file));
      out << "segregated=" << flag(v.segregated) << " congruences=" << v.congruences << '\n';
      if (v.witness) out << "witness: " << describe(*v.witness) << '\n';
      return v.segregated ? exit_ok : exit_verdict_fail;
    };
  });

  std::string output;
  auto* semi = with_file("semigroup", "Emit the (G,X,0) semigroup of a G-set", "gset file");
  semi->add_option("-o,--output", output, "write to this file instead of standard output");
  semi->callback([&] {
    action = [&] {
      std::string const text = serialize(build_gx0(load_gset(file)));
      if (output.empty()) {
        out << text;
        return exit_ok;
      }
      std::ofstream f(output, std::ios::binary);
      if (!f) throw Error(ErrorKind::FileNotFound, {}, "cannot write '" + output + "'");
      f << text;
      return exit_ok;
    };
  });

  with_file("sg-congruences", "List the congruences of a semigroup", "semigroup file")->callback([&] {
    action = [&] {
      FiniteSemigroup const s = load_semigroup(file);
      return report_congruences(out, sg_congruences_principal(s), s.order(),
                                [&] { return sg_congruences_bruteforce(s); });
    };
  });

  with_file("sg-permutable", "Congruence permutability of a semigroup", "semigroup file")->callback([&] {
    action = [&] { return report_permutability(out, sg_permutable(load_semigroup(file))); };
  });

  with_file("ideals", "Two-sided ideals of a semigroup and whether they form a chain", "semigroup file")
      ->callback([&] {
        action = [&] {
          FiniteSemigroup const s = load_semigroup(file);
          for (ElementSet i : ideals(s)) out << to_string(i) << '\n';
          ChainVerdict const v = ideals_form_chain(s);
          out << "count=" << v.ideals << " chain=" << flag(v.chain) << '\n';
          if (v.witness) out << "witness: " << to_string(v.witness->first) << ' ' << to_string(v.witness->second) << '\n';
          return exit_ok;
        };
      });

  std::string claim;
  SuiteBounds bounds;
  auto* verify = app.add_subcommand("verify", "Run a claim verifier over the instance catalog");
  verify->add_option("claim", claim, "lemma1 | lemma2 | lemma3 | thm1 | thm6 | ideal_chain | example | all")
      ->required();
  verify->add_option("--max-group", bounds.max_group_order, "largest group order")->capture_default_str();
  verify->add_option("--max-carrier", bounds.max_carrier, "largest total carrier")->capture_default_str();
  verify->add_option("--max-orbits", bounds.max_orbits, "most orbits per instance")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(claim, bounds, out, err); }; });

  app.add_subcommand("example-paper", "Reproduce the two-fixed-point example")->callback([&] {
    action = [&] { return cmd_example(out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (CLI::CallForAllHelp const& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    return action();
  } catch (Error const& e) {
    err << "error: " << e.summary() << ": " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace cpgset::cli

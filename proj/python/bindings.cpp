#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpgset/congruence.hpp"
#include "cpgset/error.hpp"
#include "cpgset/group_library.hpp"
#include "cpgset/io.hpp"
#include "cpgset/semigroup.hpp"
#include "cpgset/theorems.hpp"

namespace py = pybind11;
using namespace cpgset;

namespace {

using Blocks = std::vector<std::vector<Element>>;

Blocks blocks(Partition const& p) { return p.blocks(); }

std::vector<Blocks> all_blocks(std::vector<Partition> const& list) {
  std::vector<Blocks> out;
  out.reserve(list.size());
  for (auto const& p : list) out.push_back(p.blocks());
  return out;
}

Partition partition_of(std::size_t n, Blocks const& b) { return Partition::from_blocks(n, b); }

py::dict permutability(PermutabilityVerdict const& v) {
  py::dict d;
  d["permutable"] = v.permutable;
  d["congruences"] = v.congruences;
  d["pairs_checked"] = v.pairs_checked;
  if (v.witness) {
    py::dict w;
    w["alpha"] = blocks(v.witness->alpha);
    w["beta"] = blocks(v.witness->beta);
    w["pair"] = py::make_tuple(v.witness->pair.first, v.witness->pair.second);
    w["in_alpha_beta"] = v.witness->in_alpha_beta;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::dict segregation(SegregationVerdict const& v) {
  py::dict d;
  d["segregated"] = v.segregated;
  d["congruences"] = v.congruences;
  if (v.witness) {
    py::dict w;
    w["congruence"] = blocks(v.witness->congruence);
    w["orbits"] = py::make_tuple(v.witness->orbit_a, v.witness->orbit_b);
    w["unlinked"] = py::make_tuple(v.witness->unlinked.first, v.witness->unlinked.second);
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::dict report(VerdictReport const& r) {
  py::dict d;
  d["claim"] = r.claim_id;
  d["instance"] = r.instance;
  d["verdict"] = r.verdict;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  d["lhs"] = r.lhs ? py::cast(*r.lhs) : py::none();
  d["rhs"] = r.rhs ? py::cast(*r.rhs) : py::none();
  d["congruences"] = r.stats.congruences;
  d["pairs_checked"] = r.stats.pairs_checked;
  d["checks"] = r.checks;
  d["line"] = format_verdict_line(r);
  return d;
}

std::vector<std::vector<Element>> subgroup_lists(std::vector<Subgroup> const& list) {
  std::vector<std::vector<Element>> out;
  for (auto const& h : list) out.push_back(h.members().members());
  return out;
}

ElementSet set_of(std::vector<Element> const& members) {
  ElementSet s;
  for (Element x : members) {
    if (x >= ElementSet::capacity) throw Error(ErrorKind::OutOfRange, {x}, "element out of range");
    s.insert(x);
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_cpgset, m) {
  m.doc() = "Finite groups, G-sets, (G,X,0) semigroups and congruence permutability";

  static py::exception<Error> error(m, "CpgsetError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::object inst = py::handle(error.ptr())(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      inst.attr("witness") = e.witness();
      inst.attr("summary") = e.summary();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init(&validate_group), py::arg("table"))
      .def_static("builtin", [](std::string const& name) { return builtin_group(name); }, py::arg("name"))
      .def_static("cyclic", &cyclic_group, py::arg("n"))
      .def_static("trivial", &trivial_group)
      .def_static("parse", &parse_group, py::arg("text"))
      .def_static("load", [](std::string const& path) { return parse_group(read_file(path)); }, py::arg("path"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("inverse", &FiniteGroup::inverse, py::arg("x"))
      .def("product", &FiniteGroup::product, py::arg("a"), py::arg("b"))
      .def("table", &FiniteGroup::rows)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("subgroups", [](FiniteGroup const& g) { return subgroup_lists(subgroups(g)); })
      .def(
          "interval",
          [](FiniteGroup const& g, std::vector<Element> const& lower) {
            return subgroup_lists(interval_subgroups(g, Subgroup(g, set_of(lower))));
          },
          py::arg("lower"))
      .def(
          "set_product",
          [](FiniteGroup const& g, std::vector<Element> const& h, std::vector<Element> const& k) {
            return set_product(Subgroup(g, set_of(h)), Subgroup(g, set_of(k))).members();
          },
          py::arg("h"), py::arg("k"))
      .def("serialize", [](FiniteGroup const& g) { return serialize(g); })
      .def("__eq__", [](FiniteGroup const& a, FiniteGroup const& b) { return a == b; })
      .def("__repr__", [](FiniteGroup const& g) { return "<Group order=" + std::to_string(g.order()) + ">"; });

  m.def("builtin_group_names", [] {
    std::vector<std::string> out;
    for (auto const& g : builtin_groups()) out.push_back(g.name);
    return out;
  });

  py::class_<GSet>(m, "GSet")
      .def(py::init(&validate_gset), py::arg("group"), py::arg("action"))
      .def_static(
          "coset_action",
          [](FiniteGroup const& g, std::vector<Element> const& h) { return coset_action(g, Subgroup(g, set_of(h))); },
          py::arg("group"), py::arg("subgroup"))
      .def_static("disjoint_union", [](std::vector<GSet> const& parts) { return disjoint_union(parts); },
                  py::arg("parts"))
      .def_static("parse", &parse_gset, py::arg("text"))
      .def_static("load", [](std::string const& path) { return parse_gset(read_file(path)); }, py::arg("path"))
      .def_property_readonly("group", &GSet::group)
      .def_property_readonly("carrier_size", &GSet::carrier_size)
      .def("act", &GSet::act, py::arg("x"), py::arg("g"))
      .def("action", &GSet::rows)
      .def("orbits", [](GSet const& x) { return orbits(x).blocks; })
      .def("is_transitive", &is_transitive)
      .def("stabilizer", [](GSet const& x, Element p) {
        if (p >= x.carrier_size()) throw Error(ErrorKind::OutOfRange, {p}, "point out of range");
        return stabilizer(x, p).members().members();
      }, py::arg("point"))
      .def(
          "congruences",
          [](GSet const& x, std::string const& method) {
            if (method == "principal") return all_blocks(congruences_principal(x));
            if (method == "bruteforce") return all_blocks(congruences_bruteforce(x));
            throw py::value_error("method must be 'principal' or 'bruteforce'");
          },
          py::arg("method") = "principal")
      .def(
          "is_congruence", [](GSet const& x, Blocks const& b) { return is_congruence(x, partition_of(x.carrier_size(), b)); },
          py::arg("blocks"))
      .def(
          "principal_congruence", [](GSet const& x, Element a, Element b) { return blocks(principal_congruence(x, a, b)); },
          py::arg("a"), py::arg("b"))
      .def("permutable", [](GSet const& x) { return permutability(gset_permutable(x)); })
      .def("segregated", [](GSet const& x) { return segregation(is_segregated(x)); })
      .def("semigroup", &build_gx0)
      .def("orbit_subsemigroups", &orbit_subsemigroups)
      .def("serialize", [](GSet const& x) { return serialize(x); })
      .def("__eq__", [](GSet const& a, GSet const& b) { return a == b; })
      .def("__repr__", [](GSet const& x) { return "<GSet " + serialize_inline(x) + ">"; });

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def(py::init(&validate_semigroup), py::arg("table"))
      .def_static("parse", &parse_semigroup, py::arg("text"))
      .def_static("load", [](std::string const& path) { return parse_semigroup(read_file(path)); }, py::arg("path"))
      .def_property_readonly("order", &FiniteSemigroup::order)
      .def_property_readonly("zero", &FiniteSemigroup::zero)
      .def("product", &FiniteSemigroup::product, py::arg("a"), py::arg("b"))
      .def("table", &FiniteSemigroup::rows)
      .def("roles", [](FiniteSemigroup const& s) {
        std::vector<std::string> out;
        for (Role const& r : s.roles()) {
          switch (r.kind) {
            case RoleKind::GroupPart: out.push_back("g" + std::to_string(r.source)); break;
            case RoleKind::SetPart: out.push_back("x" + std::to_string(r.source)); break;
            case RoleKind::Zero: out.push_back("z"); break;
          }
        }
        return out;
      })
      .def(
          "congruences",
          [](FiniteSemigroup const& s, std::string const& method) {
            if (method == "principal") return all_blocks(sg_congruences_principal(s));
            if (method == "bruteforce") return all_blocks(sg_congruences_bruteforce(s));
            throw py::value_error("method must be 'principal' or 'bruteforce'");
          },
          py::arg("method") = "principal")
      .def(
          "is_congruence",
          [](FiniteSemigroup const& s, Blocks const& b) { return is_sg_congruence(s, partition_of(s.order(), b)); },
          py::arg("blocks"))
      .def("permutable", [](FiniteSemigroup const& s) { return permutability(sg_permutable(s)); })
      .def("ideals", [](FiniteSemigroup const& s) {
        std::vector<std::vector<Element>> out;
        for (ElementSet i : ideals(s)) out.push_back(i.members());
        return out;
      })
      .def("ideals_chain", [](FiniteSemigroup const& s) {
        ChainVerdict const v = ideals_form_chain(s);
        py::dict d;
        d["chain"] = v.chain;
        d["ideals"] = v.ideals;
        d["witness"] = v.witness ? py::cast(std::make_pair(v.witness->first.members(), v.witness->second.members()))
                                 : py::none();
        return d;
      })
      .def("serialize", [](FiniteSemigroup const& s) { return serialize(s); })
      .def("__eq__", [](FiniteSemigroup const& a, FiniteSemigroup const& b) { return a == b; })
      .def("__repr__",
           [](FiniteSemigroup const& s) { return "<Semigroup order=" + std::to_string(s.order()) + ">"; });

  m.def(
      "compose",
      [](std::size_t n, Blocks const& p, Blocks const& q) {
        std::vector<std::pair<Element, Element>> out;
        for (auto const& e : compose(partition_of(n, p), partition_of(n, q)).pairs()) out.emplace_back(e.first, e.second);
        return out;
      },
      py::arg("n"), py::arg("p"), py::arg("q"), "Relational product p∘q of two partitions of {0..n-1}.");

  m.def(
      "catalog",
      [](std::size_t max_group, std::size_t max_carrier, std::size_t max_orbits) {
        std::vector<std::pair<std::string, GSet>> out;
        for (auto& inst : catalog(max_group, max_carrier, max_orbits)) out.emplace_back(inst.name, std::move(inst.gset));
        return out;
      },
      py::arg("max_group") = 8, py::arg("max_carrier") = 8, py::arg("max_orbits") = 3);

  m.def("claims", [] {
    std::vector<std::string> out;
    for (Claim c : all_claims) out.emplace_back(claim_id(c));
    return out;
  });

  m.def(
      "verify",
      [](GSet const& x, std::string const& claim) {
        auto const c = parse_claim(claim);
        if (!c) throw py::value_error("unknown claim '" + claim + "'");
        switch (*c) {
          case Claim::Lemma1: return report(verify_lemma1_all_points(x));
          case Claim::Lemma2: return report(verify_lemma2(x, 0));
          case Claim::Lemma3: return report(verify_lemma3(x));
          case Claim::Thm1: return report(verify_thm1(x));
          case Claim::Thm6: return report(verify_thm6(x));
          case Claim::IdealChain: return report(verify_ideal_chain(x));
          case Claim::Example: break;
        }
        throw py::value_error("the example claim takes no instance; use reproduce_example()");
      },
      py::arg("gset"), py::arg("claim"));

  m.def("reproduce_example", [] {
    py::list out;
    for (auto const& r : reproduce_example()) out.append(report(r));
    return out;
  });

  m.def(
      "run_suite",
      [](std::vector<std::string> const& claims, std::size_t max_group, std::size_t max_carrier,
         std::size_t max_orbits) {
        std::vector<Claim> selected;
        for (auto const& id : claims) {
          if (id == "all") {
            selected.assign(std::begin(all_claims), std::end(all_claims));
            continue;
          }
          auto const c = parse_claim(id);
          if (!c) throw py::value_error("unknown claim '" + id + "'");
          selected.push_back(*c);
        }
        SuiteSummary summary;
        {
          py::gil_scoped_release release;
          summary = run_catalog_suite({max_group, max_carrier, max_orbits}, selected);
        }
        py::dict d;
        d["ok"] = summary.ok();
        d["failures"] = summary.failures();
        d["runs"] = summary.reports.size();
        d["report"] = format_report(summary);
        return d;
      },
      py::arg("claims"), py::arg("max_group") = 8, py::arg("max_carrier") = 8, py::arg("max_orbits") = 3);
}

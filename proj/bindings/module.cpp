#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>

#include "loopkit/catalog.hpp"
#include "loopkit/io.hpp"
#include "loopkit/isotopy.hpp"
#include "loopkit/loop.hpp"
#include "loopkit/permutation.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/theorems.hpp"

namespace py = pybind11;
using namespace loopkit;

namespace {

py::object report_dict(const PropertyReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["holds"] = r.holds;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
  d["detail"] = r.detail;
  d["flags"] = r.flags;
  return d;
}

py::object tcondition_dict(const TConditionReport& r) {
  py::dict d;
  d["t1"] = r.t1;
  d["t2"] = r.t2;
  d["t3"] = r.t3;
  d["t"] = r.t;
  return d;
}

py::object verdict_dict(const TheoremVerdict& v) {
  py::list violations;
  for (const TheoremViolation& viol : v.violations) {
    py::dict w;
    w["context"] = viol.context;
    w["witness"] = viol.witness;
    violations.append(w);
  }
  py::dict d;
  d["theorem_id"] = v.theorem_id;
  d["instances_checked"] = v.instances_checked;
  d["passed"] = v.passed;
  d["violations"] = violations;
  d["notes"] = v.notes;
  return d;
}

py::object flags_dict(const FlagVector& f) {
  py::dict d;
  d["commutative"] = f.commutative;
  d["associative"] = f.associative;
  d["exponent2"] = f.exponent2;
  d["wip"] = f.wip;
  d["cip"] = f.cip;
  d["aip"] = f.aip;
  d["m1"] = f.m1;
  d["bits"] = f.bits();
  return d;
}

WipCriterion criterion_of(const std::string& name) {
  for (WipCriterion c : {WipCriterion::Definitional, WipCriterion::RightIdentity,
                         WipCriterion::LeftIdentity, WipCriterion::OperatorRho,
                         WipCriterion::OperatorLambda}) {
    if (name == wip_criterion_name(c)) return c;
  }
  throw py::value_error("unknown criterion: " + name);
}

CatalogFilter filter_of(const std::string& name) {
  if (name == "all") return CatalogFilter::All;
  if (name == "wip") return CatalogFilter::WipOnly;
  if (name == "cip") return CatalogFilter::CipOnly;
  throw py::value_error("unknown filter: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite loop analysis: properties, inverses, isotopy, catalogs";

  py::register_exception<Error>(m, "LoopkitError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def("__call__", [](const Permutation& p, int x) { return p(x); })
      .def_property_readonly("degree", &Permutation::degree)
      .def("images", [](const Permutation& p) { return p.images(); })
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__",
           [](const Permutation& p) {
             std::size_t h = 1469598103934665603ull;
             for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
             return h;
           })
      .def("__repr__",
           [](const Permutation& p) { return "Permutation" + cycle_string(p); });

  m.def("compose", &compose, py::arg("a"), py::arg("b"),
        "apply a first, then b (right action)");
  m.def("inverse", &inverse, py::arg("p"));
  m.def("power", &power, py::arg("p"), py::arg("m"));
  m.def("perm_order", &perm_order, py::arg("p"));
  m.def("cycle_string", &cycle_string, py::arg("p"));
  m.def("all_permutations", &all_permutations, py::arg("n"));

  py::class_<Loop>(m, "Loop")
      .def_static("validate", &Loop::validate, py::arg("grid"))
      .def_static("from_cells", &Loop::from_cells, py::arg("n"), py::arg("cells"))
      .def_property_readonly("order", &Loop::order)
      .def_property_readonly("identity", &Loop::identity)
      .def("mul", &Loop::mul, py::arg("x"), py::arg("y"))
      .def("left_divide", &Loop::left_divide, py::arg("a"), py::arg("b"))
      .def("right_divide", &Loop::right_divide, py::arg("a"), py::arg("b"))
      .def("left_translation", &Loop::left_translation, py::arg("x"))
      .def("right_translation", &Loop::right_translation, py::arg("x"))
      .def("j_rho", &Loop::j_rho)
      .def("j_lambda", &Loop::j_lambda)
      .def("rows", &Loop::rows)
      .def("__eq__", [](const Loop& a, const Loop& b) { return a == b; })
      .def("__repr__", [](const Loop& l) {
        std::ostringstream out;
        out << "Loop(order=" << l.order() << ", identity=" << l.identity() << ")";
        return out.str();
      });

  m.def("translations", &translations, py::arg("loop"), py::arg("x"));
  m.def("inverse_maps", &inverse_maps, py::arg("loop"));
  m.def("inner_mappings", &inner_mappings, py::arg("loop"), py::arg("x"), py::arg("y"));

  py::class_<IsotopismTriple>(m, "IsotopismTriple")
      .def(py::init([](Permutation a, Permutation b, Permutation c) {
             return IsotopismTriple{std::move(a), std::move(b), std::move(c)};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_static("identity", &IsotopismTriple::identity, py::arg("n"))
      .def_readonly("a", &IsotopismTriple::a)
      .def_readonly("b", &IsotopismTriple::b)
      .def_readonly("c", &IsotopismTriple::c)
      .def("__eq__",
           [](const IsotopismTriple& s, const IsotopismTriple& t) { return s == t; })
      .def("__repr__", [](const IsotopismTriple& t) {
        return "IsotopismTriple(" + cycle_string(t.a) + ", " + cycle_string(t.b) + ", " +
               cycle_string(t.c) + ")";
      });

  m.def("classify", [](const Loop& l) { return flags_dict(classify(l)); }, py::arg("loop"));
  m.def(
      "is_wip",
      [](const Loop& l, const std::string& criterion) {
        return report_dict(is_wip(l, criterion_of(criterion)));
      },
      py::arg("loop"), py::arg("criterion") = "definitional");
  m.def("is_cip", [](const Loop& l) { return report_dict(is_cip(l)); }, py::arg("loop"));
  m.def("is_aip", [](const Loop& l) { return report_dict(is_aip(l)); }, py::arg("loop"));
  m.def(
      "is_m_inverse",
      [](const Loop& l, int mm) { return report_dict(is_m_inverse(l, mm)); },
      py::arg("loop"), py::arg("m"));
  m.def(
      "is_weak_inverse_permutation",
      [](const Loop& l, const Permutation& alpha) {
        return report_dict(is_weak_inverse_permutation(l, alpha));
      },
      py::arg("loop"), py::arg("alpha"));
  m.def(
      "weak_inverse_sets",
      [](const Loop& l, int max_order) {
        const WeakInverseSets s = weak_inverse_sets(l, max_order);
        py::dict d;
        d["s_rho"] = s.s_rho;
        d["s_lambda"] = s.s_lambda;
        d["s_prime"] = s.s_prime;
        return d;
      },
      py::arg("loop"), py::arg("max_order") = 6);
  m.def(
      "commuting_closure_check",
      [](const Loop& l, int max_order) { return report_dict(commuting_closure_check(l, max_order)); },
      py::arg("loop"), py::arg("max_order") = 6);

  m.def(
      "check_isotopism",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return report_dict(check_isotopism(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def("derive_third", &derive_third, py::arg("g"), py::arg("h"), py::arg("a"), py::arg("b"));
  m.def("apply_isotopism", &apply_isotopism, py::arg("g"), py::arg("triple"));
  m.def("principal_isotope", &principal_isotope, py::arg("g"), py::arg("f"), py::arg("gg"));
  m.def(
      "check_t_condition",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return tcondition_dict(check_t_condition(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def(
      "find_isotopisms",
      [](const Loop& g, const Loop& h, std::optional<long> limit, int max_order, int workers) {
        return find_isotopisms(g, h, limit, max_order, workers);
      },
      py::arg("g"), py::arg("h"), py::arg("limit") = py::none(), py::arg("max_order") = 7,
      py::arg("workers") = 0);
  m.def("find_isomorphisms", &find_isomorphisms, py::arg("g"), py::arg("h"),
        py::arg("workers") = 0);
  m.def("autotopisms", &autotopisms, py::arg("g"), py::arg("max_order") = 6,
        py::arg("workers") = 0);

  m.def(
      "enumerate_loops",
      [](int n, int max_order) { return enumerate_loops(n, max_order); }, py::arg("n"),
      py::arg("max_order") = 6);
  m.def("canonical_key", [](const Loop& l) { return py::bytes(canonical_key(l)); },
        py::arg("loop"));
  m.def("normalize", &normalize, py::arg("loop"));
  m.def(
      "build_catalog",
      [](int n, const std::string& filter, int max_order, int workers) {
        py::list out;
        for (const CatalogEntry& e : build_catalog(n, filter_of(filter), max_order, workers)) {
          py::dict d;
          d["loop"] = e.loop;
          d["flags"] = e.flags.bits();
          d["key"] = py::bytes(e.key);
          d["iso_class_id"] = e.iso_class_id;
          d["members"] = e.members;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("filter") = "all", py::arg("max_order") = 6, py::arg("workers") = 0);

  m.def("counterexample_loop", [] { return counterexample_loop(); });
  m.def("counterexample_triple", [] { return counterexample_triple(); });
  m.def(
      "verify_counterexample", [] { return verdict_dict(verify_counterexample()); });
  m.def(
      "verify_wip_transfer",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return verdict_dict(verify_wip_transfer(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def(
      "verify_translation_identities",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return verdict_dict(verify_translation_identities(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def(
      "verify_osborn_autotopism",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t, int variant) {
        return verdict_dict(verify_osborn_autotopism(g, h, t, variant));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"), py::arg("variant"));
  m.def(
      "verify_t_corollaries",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return verdict_dict(verify_t_corollaries(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def(
      "verify_t_isomorphy",
      [](const Loop& g, const Loop& h, const IsotopismTriple& t) {
        return verdict_dict(verify_t_isomorphy(g, h, t));
      },
      py::arg("g"), py::arg("h"), py::arg("triple"));
  m.def(
      "verify_artzy_cip", [](const Loop& g) { return verdict_dict(verify_artzy_cip(g)); },
      py::arg("g"));
  m.def(
      "verify_suite",
      [](int transfer_order, int artzy_order, int max_order, int workers) {
        VerificationOptions opts;
        opts.transfer_order = transfer_order;
        opts.artzy_order = artzy_order;
        opts.max_order = max_order;
        opts.workers = workers;
        py::list out;
        for (const TheoremVerdict& v : verify_suite(opts)) out.append(verdict_dict(v));
        return out;
      },
      py::arg("transfer_order") = 5, py::arg("artzy_order") = 6, py::arg("max_order") = 6,
      py::arg("workers") = 0);

  m.def("read_loop_file", &io::read_loop_file, py::arg("path"));
  m.def("write_loop_file", &io::write_loop_file, py::arg("loop"), py::arg("path"));
  m.def("loop_text", &io::write_loop, py::arg("loop"));
  m.def(
      "loop_from_text",
      [](const std::string& text) {
        std::istringstream in(text);
        return io::read_loop(in);
      },
      py::arg("text"));
  m.def("read_permutation_file", &io::read_permutation_file, py::arg("path"));
  m.def("write_permutation_file", &io::write_permutation_file, py::arg("p"), py::arg("path"));
  m.def("read_triple_file", &io::read_triple_file, py::arg("path"));
  m.def("write_triple_file", &io::write_triple_file, py::arg("triple"), py::arg("path"));
}

// Python bindings for the main operations: group closure, equipment,
// C-graph queries, Hurwitz class counting, the word problem and the
// ambiguity index.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "facto/ambiguity.hpp"

namespace py = pybind11;
using namespace facto;

namespace {

struct PyEquipment {
  EquippedGroup eg;
  std::shared_ptr<CGroupOracle> oracle;  // built on demand

  CGroupOracle& get_oracle() {
    if (!oracle) oracle = std::make_shared<CGroupOracle>(eg);
    return *oracle;
  }
};

PyEquipment make_py_equipment(const std::vector<std::string>& generators,
                              const std::vector<std::string>& class_reps,
                              uint32_t degree) {
  std::vector<Perm> gens;
  for (const auto& s : generators) gens.push_back(Perm::parse_cycles(s, degree));
  uint32_t d = degree;
  for (const auto& g : gens) d = std::max(d, g.degree());
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::close_generators(d, gens));
  return PyEquipment{make_equipment_cycles(std::move(G), class_reps), nullptr};
}

Tuple tuple_from_cycles(const EquippedGroup& eg, const std::vector<std::string>& entries) {
  Tuple t;
  for (const auto& s : entries) {
    int64_t id = eg.G().index_of(Perm::parse_cycles(s, eg.G().degree()));
    if (id < 0) throw Error(ErrorKind::ParseError, "entry not in group: " + s);
    t.push_back(static_cast<Eid>(id));
  }
  return t;
}

}  // namespace

PYBIND11_MODULE(_facto, m) {
  m.doc() = "factorization semigroups over equipped finite groups";

  py::register_exception<Error>(m, "FactoError");

  py::class_<PyEquipment>(m, "Equipment")
      .def(py::init(&make_py_equipment), py::arg("generators"),
           py::arg("class_reps"), py::arg("degree") = 0)
      .def_property_readonly("group_order",
                             [](const PyEquipment& e) { return e.eg.G().size(); })
      .def_property_readonly("num_classes",
                             [](const PyEquipment& e) { return e.eg.num_classes(); })
      .def_property_readonly("class_sizes",
                             [](const PyEquipment& e) {
                               std::vector<size_t> s;
                               for (const auto& c : e.eg.classes)
                                 s.push_back(c.members.size());
                               return s;
                             })
      .def("generates", [](const PyEquipment& e) { return e.eg.o_generates(); })
      .def("validate",
           [](const PyEquipment& e) {
             CGraph g = build_cgraph(e.eg);
             auto rep = validate_cgraph(g);
             std::vector<std::pair<std::string, bool>> out;
             for (const auto& r : rep.results) out.push_back({r.condition, r.pass});
             return out;
           })
      .def("periods",
           [](const PyEquipment& e) {
             CGraph g = build_cgraph(e.eg);
             std::vector<uint32_t> p;
             for (const auto& c : g.comps) p.push_back(c.period);
             return p;
           })
      .def("diameter",
           [](const PyEquipment& e) {
             CGraph g = build_cgraph(e.eg);
             return diameter(g, all_components(g));
           })
      .def("threshold_t1",
           [](const PyEquipment& e) {
             CGraph g = build_cgraph(e.eg);
             return threshold_T1(g);
           })
      .def(
          "count_classes",
          [](const PyEquipment& e, const std::vector<uint32_t>& tau,
             const std::string& product, bool require_generating, uint64_t cap) {
            int64_t target = e.eg.G().index_of(
                Perm::parse_cycles(product, e.eg.G().degree()));
            if (target < 0)
              throw Error(ErrorKind::ParseError, "product not in group");
            auto cc = enumerate_classes(e.eg, TypeVector{tau},
                                        static_cast<Eid>(target),
                                        require_generating, cap);
            py::dict d;
            d["count"] = cc.count;
            d["capped"] = cc.capped;
            d["tuples"] = cc.tuples;
            return d;
          },
          py::arg("tau"), py::arg("product") = "identity",
          py::arg("require_generating") = true, py::arg("cap") = 10'000'000ull)
      .def("tilde_order",
           [](PyEquipment& e) { return e.get_oracle().tilde().order; })
      .def("words_equal",
           [](PyEquipment& e, const std::vector<std::string>& w1,
              const std::vector<std::string>& w2) {
             auto& o = e.get_oracle();
             return o.equal_in_cgroup(tuple_from_cycles(e.eg, w1),
                                      tuple_from_cycles(e.eg, w2));
           })
      .def("ambiguity",
           [](PyEquipment& e, bool with_orbits) {
             Caps caps;
             auto rep = ambiguity_report(e.eg, caps, with_orbits);
             py::dict d;
             d["value"] = rep.value;
             d["methods_agree"] = rep.methods_agree;
             d["via_partition"] = rep.via_partition;
             d["via_commutator"] = rep.via_commutator;
             if (with_orbits) {
               d["plateau"] = rep.via_orbits.value;
               d["plateau_certified"] = rep.via_orbits.certified;
             }
             return d;
           },
           py::arg("with_orbits") = false);

  m.def("parse_cycles", [](const std::string& s, uint32_t degree) {
    return Perm::parse_cycles(s, degree).to_cycles();
  }, py::arg("text"), py::arg("degree") = 0);
}

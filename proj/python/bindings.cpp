#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "nalc/reasoner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nalc;

namespace {

py::object fraction(const Degree& d) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(d.numerator(), d.denominator());
}

// str ("0.6", "3/5"), int, Fraction or float (read through its repr, so 0.6 is 3/5)
Degree to_degree(const py::handle& h) {
  std::string text;
  if (py::isinstance<py::str>(h)) text = h.cast<std::string>();
  else if (py::isinstance<py::float_>(h)) text = py::str(py::module_::import("fractions").attr("Fraction")(py::repr(h)));
  else text = py::str(h);
  auto d = Degree::parse(text);
  if (!d) throw py::value_error("not a degree: " + text);
  return *d;
}

py::tuple pair(const DegreePair& p) { return py::make_tuple(fraction(p.n), fraction(p.m)); }

Concept concept_of(const py::handle& h) {
  if (py::isinstance<Concept>(h)) return h.cast<Concept>();
  return parse_concept(h.cast<std::string>());
}

KnowledgeBase kb_of(const py::handle& h) {
  if (py::isinstance<KnowledgeBase>(h)) return h.cast<KnowledgeBase>();
  return parse_kb(h.cast<std::string>());
}

NeutrosophicAssertion query_of(const py::handle& h) { return parse_query(h.cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_nalc, m) {
  m.doc() = "Neutrosophic ALC: parsing, expansion, entailment, subsumption and truth-value bounds";

  static py::exception<ParseFailure> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseFailure& e) {
      std::string msg;
      for (const auto& err : e.errors()) msg += (msg.empty() ? "" : "\n") + format_error(err);
      py::set_error(parse_error, msg.c_str());
    }
  });
  py::register_exception<InvalidKnowledgeBase>(m, "InvalidKnowledgeBase", PyExc_ValueError);
  py::register_exception<UnsupportedQuery>(m, "UnsupportedQuery", PyExc_ValueError);
  py::register_exception<TableauExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "OracleLimit", PyExc_RuntimeError);

  py::class_<Concept>(m, "Concept")
      .def(py::init([](const std::string& s) { return parse_concept(s); }), py::arg("text"))
      .def("__str__", [](const Concept& c) { return c.text(); })
      .def("__repr__", [](const Concept& c) { return "Concept('" + c.text() + "')"; })
      .def("__eq__", [](const Concept& a, const Concept& b) { return a == b; })
      .def("__hash__", [](const Concept& c) { return c.id(); })
      .def_property_readonly("depth", &Concept::depth)
      .def_property_readonly("size", &Concept::size)
      .def("nnf", [](const Concept& c) { return nnf(c); });

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def(py::init([](const std::string& text) { return parse_kb(text); }), py::arg("text") = "")
      .def("__str__", [](const KnowledgeBase& kb) { return format_kb(kb); })
      .def_property_readonly("assertions",
                             [](const KnowledgeBase& kb) {
                               std::vector<std::string> out;
                               for (const auto& a : kb.assertions) out.push_back(format_neutrosophic(a));
                               return out;
                             })
      .def_property_readonly("terminology",
                             [](const KnowledgeBase& kb) {
                               std::vector<std::string> out;
                               for (const auto& t : kb.terminology) out.push_back(format_axiom(t));
                               return out;
                             })
      .def("expand", [](const KnowledgeBase& kb) { return expand(kb); })
      .def("mentioned_degrees", [](const KnowledgeBase& kb) {
        py::list out;
        for (const auto& d : mentioned_degrees(kb)) out.append(fraction(d));
        return out;
      });

  py::class_<Reasoner>(m, "Reasoner")
      .def(py::init([](const py::object& kb) { return std::make_unique<Reasoner>(kb_of(kb)); }), py::arg("kb"))
      .def("satisfiable", &Reasoner::satisfiable)
      .def("entails", [](const Reasoner& r, const py::object& q) { return r.entails(query_of(q)); }, py::arg("query"))
      .def("glb", [](const Reasoner& r, const std::string& a) { return pair(r.glb(parse_assertion(a)).bound); },
           py::arg("assertion"))
      .def("lub", [](const Reasoner& r, const std::string& a) { return pair(r.lub_direct(parse_assertion(a)).bound); },
           py::arg("assertion"))
      .def("candidates", [](const Reasoner& r) {
        py::list out;
        for (const auto& d : r.candidates()) out.append(fraction(d));
        return out;
      });

  m.def("parse_concept", [](const std::string& s) { return parse_concept(s); }, py::arg("text"));
  m.def("format_concept", [](const py::object& c) { return format_concept(concept_of(c)); }, py::arg("concept"));
  m.def("nnf", [](const py::object& c) { return nnf(concept_of(c)); }, py::arg("concept"));
  m.def("parse_kb", [](const std::string& s) { return parse_kb(s); }, py::arg("text"));
  m.def("expand", [](const py::object& kb) { return expand(kb_of(kb)); }, py::arg("kb"));
  m.def("normalize_query", [](const std::string& q) { return format_neutrosophic(parse_query(q)); }, py::arg("query"));

  m.def("entails", [](const py::object& kb, const py::object& q) { return entails(kb_of(kb), query_of(q)); },
        py::arg("kb"), py::arg("query"));
  m.def("satisfiable", [](const py::object& kb) { return Reasoner(kb_of(kb)).satisfiable(); }, py::arg("kb"));
  m.def(
      "subsumes",
      [](const py::object& kb, const py::object& c, const py::object& d, const std::optional<py::list>& grid) {
        std::vector<Degree> g = default_subsumption_grid();
        if (grid) {
          g.clear();
          for (const auto& x : *grid) g.push_back(to_degree(x));
        }
        return subsumes(kb_of(kb), concept_of(c), concept_of(d), g);
      },
      py::arg("kb"), py::arg("sub"), py::arg("sup"), py::arg("grid") = py::none());
  m.def("glb", [](const py::object& kb, const std::string& a) { return pair(glb(kb_of(kb), parse_assertion(a)).bound); },
        py::arg("kb"), py::arg("assertion"));
  m.def("lub", [](const py::object& kb, const std::string& a) { return pair(lub(kb_of(kb), parse_assertion(a)).bound); },
        py::arg("kb"), py::arg("assertion"));
  m.def("oracle_entails", [](const py::object& kb, const py::object& q) { return oracle_entails(kb_of(kb), query_of(q)); },
        py::arg("kb"), py::arg("query"));
  m.def("degree", [](const py::object& x) { return fraction(to_degree(x)); }, py::arg("value"));
}

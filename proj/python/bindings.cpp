#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hochkit/builtins.hpp"
#include "hochkit/cech.hpp"
#include "hochkit/cyclic.hpp"
#include "hochkit/error.hpp"
#include "hochkit/harness.hpp"
#include "hochkit/hochschild.hpp"

namespace py = pybind11;
using namespace hochkit;
using namespace pybind11::literals;

namespace {

HochschildOptions options(bool allow_large) {
  HochschildOptions o;
  o.allow_large = allow_large;
  return o;
}

py::dict kunneth_dict(const KunnethReport& r) {
  py::list degrees;
  for (const auto& c : r.checks)
    degrees.append(py::dict("degree"_a = c.degree, "expected"_a = c.expected, "actual"_a = c.actual, "pass"_a = c.pass));
  py::dict witnesses;
  for (const auto& [name, ok] : r.witnesses) witnesses[py::str(name)] = ok;
  return py::dict("name"_a = r.name, "degrees"_a = degrees, "witnesses"_a = witnesses, "pass"_a = r.pass());
}

py::dict sequence_dict(const ExactSequenceReport& r) {
  py::list nodes;
  for (const auto& n : r.nodes)
    nodes.append(py::dict("label"_a = n.label, "degree"_a = n.degree, "dim"_a = n.dim, "exact"_a = n.exact));
  py::dict witnesses;
  for (const auto& [name, ok] : r.witnesses) witnesses[py::str(name)] = ok;
  return py::dict("name"_a = r.name, "nodes"_a = nodes, "witnesses"_a = witnesses, "pass"_a = r.pass());
}

std::vector<size_t> complex_dims(const CochainComplex& c, int top) {
  std::vector<size_t> out;
  for (int n = 0; n <= top; ++n) out.push_back(cohomology_dim(c, n));
  return out;
}

MonomialWindow window_for(std::initializer_list<int> twists, std::optional<int> bound) {
  int m = 4;
  for (int d : twists) m = std::max(m, std::abs(d) + 2);
  return MonomialWindow{bound.value_or(m)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hochschild, cyclic and Čech computations";

  auto base = py::register_exception<Error>(m, "HochkitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidAlgebra>(m, "InvalidAlgebra", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<DgAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &DgAlgebra::dim)
      .def_property_readonly("field", [](const DgAlgebra& a) { return a.field().name(); })
      .def_property_readonly("labels", &DgAlgebra::labels)
      .def_property_readonly("degrees", &DgAlgebra::degrees)
      .def_property_readonly("unit", [](const DgAlgebra& a) { return a.label(a.unit()); })
      .def("violations", [](const DgAlgebra& a) {
        std::vector<std::string> out;
        for (const auto& v : validate(a).violations) {
          std::string s = v.axiom + " (";
          for (size_t i = 0; i < v.witness.size(); ++i) s += (i ? ", " : "") + v.witness[i];
          out.push_back(s + ")");
        }
        return out;
      })
      .def("serialize", &serialize_algebra)
      .def("__eq__", [](const DgAlgebra& a, const DgAlgebra& b) { return a == b; })
      .def("__repr__", [](const DgAlgebra& a) {
        return "<Algebra dim=" + std::to_string(a.dim()) + " over " + a.field().name() + ">";
      });

  m.def("builtin", [](const std::string& name, const std::string& field) { return builtin(name, Field::parse(field)); },
        "name"_a, "field"_a = "Q");
  m.def("builtin_names", &builtin_names);
  m.def("parse_algebra", &parse_algebra, "text"_a);
  m.def("load", [](const std::string& name, const std::string& field) { return resolve_algebra(name, Field::parse(field)); },
        "name_or_path"_a, "field"_a = "Q");
  m.def("tensor", &tensor_algebras, "a"_a, "b"_a);
  m.def("opposite", &opposite, "a"_a);
  m.def("enveloping", &enveloping, "a"_a);
  m.def("matrix", &matrix_algebra, "a"_a, "n"_a);

  m.def("hh_cohomology", [](const DgAlgebra& a, int n, bool large) { return hh_cohomology_dims(a, n, options(large)); },
        "a"_a, "count"_a, "allow_large"_a = false, "dim HH^k(A, A) for k = 0..count-1");
  m.def("hh_homology", [](const DgAlgebra& a, int n, bool large) { return hh_homology_dims(a, n, options(large)); },
        "a"_a, "count"_a, "allow_large"_a = false, "dim HH_k(A, A) for k = 0..count-1");
  m.def("cyclic_homology",
        [](const DgAlgebra& a, int n, bool large) { return cyclic_homology_dims(a, n + 1, options(large)); }, "a"_a,
        "count"_a, "allow_large"_a = false, "dim HC_k(A) for k = 0..count-1");

  m.def("kunneth_hh", [](const DgAlgebra& a, const DgAlgebra& b, int n) { return kunneth_dict(kunneth_check_cohomology(a, b, n)); },
        "a"_a, "b"_a, "max_degree"_a);
  m.def("kunneth_hh_homology",
        [](const DgAlgebra& a, const DgAlgebra& b, int n) { return kunneth_dict(kunneth_check_homology(a, b, n)); }, "a"_a,
        "b"_a, "max_degree"_a);
  m.def("morita", [](const DgAlgebra& a, int n, int d) { return kunneth_dict(morita_check(a, n, d)); }, "a"_a, "n"_a,
        "max_degree"_a);
  m.def("periodicity", [](const DgAlgebra& a, int level) { return sequence_dict(periodicity_sequence_check(a, level)); },
        "a"_a, "level"_a);
  m.def("kunneth_hc",
        [](const DgAlgebra& a, const DgAlgebra& b, int level) { return sequence_dict(hc_kunneth_sequence_check(a, b, level)); },
        "a"_a, "b"_a, "level"_a);

  m.def("cech", [](int d, std::optional<int> window) { return complex_dims(cech_complex(d, window_for({d}, window)).complex, 1); },
        "d"_a, "window"_a = py::none(), "(h^0, h^1) of O(d) on P^1");
  m.def("cech_hom",
        [](int d1, int d2, std::optional<int> window) {
          return complex_dims(hom_complex_cech(d1, d2, window_for({d1, d2}, window)), 1);
        },
        "d1"_a, "d2"_a, "window"_a = py::none());
  m.def("cech_product",
        [](int a, int b, std::optional<int> window) {
          return complex_dims(product_cech_complex(a, b, window_for({a, b}, window)).complex, 2);
        },
        "a"_a, "b"_a, "window"_a = py::none(), "h^0..h^2 of O(a)⊠O(b) on P^1×P^1");
  m.def("kunneth_cech",
        [](int a, int b, std::optional<int> window) { return kunneth_dict(kunneth_cech_check(a, b, window_for({a, b}, window))); },
        "a"_a, "b"_a, "window"_a = py::none());

  m.def("scenario_names", &scenario_names);
  m.def("_run_scenario",
        [](const std::string& command, const std::string& algebra, const std::string& a, const std::string& b,
           const std::string& field, int max_degree, int window, int twist, int d1, int d2, int n, int criterion,
           bool timings) {
          ScenarioOptions o;
          o.algebra = algebra;
          o.a = a;
          o.b = b;
          o.field = Field::parse(field);
          o.max_degree = max_degree;
          o.window = window;
          o.twist = twist;
          o.d1 = d1;
          o.d2 = d2;
          o.matrix_size = n;
          o.criterion = criterion;
          return to_json(run_scenario(command, o), timings);
        });
  m.def("_run_criterion", [](int id, bool timings) { return to_json({run_criterion(id)}, timings); });
  m.attr("criteria") = kCriteria;
}

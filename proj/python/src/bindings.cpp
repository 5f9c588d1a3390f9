#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpbe/errors.hpp"
#include "mpbe/report.hpp"

namespace py = pybind11;
using namespace mpbe;

namespace {

std::vector<MonadicPair> bare(const std::vector<NamedPair>& named) {
  std::vector<MonadicPair> v;
  for (const auto& p : named) v.push_back(p.pair);
  return v;
}

std::vector<NamedPair> select(const AlgebraDocument& doc, const std::vector<std::string>& prefixes) {
  if (prefixes.empty()) return document_pairs(doc);
  std::vector<NamedPair> v;
  for (const auto& p : prefixes) v.push_back(find_pair(doc, p));
  return v;
}

ElementSet element_set(const FiniteAlgebra& a, const std::vector<std::string>& names) {
  ElementSet s;
  for (const auto& n : names) {
    auto e = a.find(n);
    if (!e) throw InvalidAlgebra("unknown element '" + n + "'");
    s.insert(*e);
  }
  return s;
}

std::vector<Flag> flags(const std::vector<std::string>& names) {
  std::vector<Flag> v;
  for (const auto& n : names) {
    auto f = flag_from_name(n);
    if (!f) throw InvalidAlgebra("unknown flag '" + n + "'");
    v.push_back(*f);
  }
  return v;
}

std::string check(const AlgebraDocument& doc) {
  try {
    return report::classification(classify(doc.algebra)).dump();
  } catch (const PreconditionUnmet&) {
    return report::Json{{"algebra", report::algebra(doc.algebra)},
                        {"pseudo_be", report::verdicts(doc.algebra, check_pseudo_be(doc.algebra))}}
        .dump();
  }
}

std::string mop(const AlgebraDocument& doc, const std::string& mode_name, bool unpruned) {
  Model m = classify(doc.algebra);
  auto mode = mode_from_name(mode_name);
  if (!mode) throw InvalidAlgebra("unknown mode '" + mode_name + "'");
  MopStats st;
  auto pairs = enumerate_mop(m, {.mode = *mode, .unpruned = unpruned}, &st);
  return report::mop(m, pairs, *mode, st).dump();
}

std::string systems(const AlgebraDocument& doc, const std::vector<std::string>& pairs) {
  Model m = classify(doc.algebra);
  auto named = pairs.empty() ? std::vector<NamedPair>{} : select(doc, pairs);
  return report::systems(m, enumerate_ds(m, bare(named)), named).dump();
}

std::vector<std::string> generated(const AlgebraDocument& doc, const std::vector<std::string>& xs) {
  const FiniteAlgebra& a = doc.algebra;
  classify(a);
  std::vector<std::string> out;
  for (Elem e : generated_ds(a, element_set(a, xs)).members()) out.push_back(a.element_name(e));
  return out;
}

std::string verify(const AlgebraDocument& doc, const std::vector<std::string>& pairs,
                   const std::vector<std::string>& laws, bool conjectures, unsigned threads) {
  Model m = classify(doc.algebra);
  auto named = select(doc, pairs);
  auto vs = verify_suite(m, bare(named), {.ids = laws, .include_conjectures = conjectures}, threads);
  return report::suite(m, vs, named).dump();
}

std::string search(const std::string& law, std::size_t min_size, std::size_t max_size,
                   const std::vector<std::string>& require, const std::vector<std::string>& forbid, bool iso,
                   bool prune, std::uint64_t budget, unsigned threads) {
  SearchSpec spec{.min_size = min_size,
                  .max_size = max_size,
                  .require = flags(require),
                  .forbid = flags(forbid),
                  .law = law,
                  .iso_rejection = iso,
                  .prune = prune,
                  .budget = budget,
                  .threads = threads};
  return report::search(spec, search_counterexample(spec)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite pseudo BE-algebras with quantifiers";

  static PyObject* error = PyErr_NewException("mpbe._core.Error", PyExc_RuntimeError, nullptr);
  static PyObject* parse_error = PyErr_NewException("mpbe._core.ParseError", error, nullptr);
  m.add_object("Error", py::handle(error));
  m.add_object("ParseError", py::handle(parse_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      // args are (message, line)
      PyErr_SetObject(parse_error, py::make_tuple(e.what(), e.line()).ptr());
    } catch (const Error& e) {
      PyErr_SetString(error, e.what());
    }
  });

  py::class_<AlgebraDocument>(m, "Document")
      .def_static("parse", &parse_algebra, py::arg("text"))
      .def_static("load", &load_algebra, py::arg("path"))
      .def_property_readonly("name", [](const AlgebraDocument& d) { return d.algebra.name(); })
      .def_property_readonly("elements", [](const AlgebraDocument& d) { return d.algebra.element_names(); })
      .def_property_readonly("size", [](const AlgebraDocument& d) { return d.algebra.size(); })
      .def_property_readonly("pairs",
                             [](const AlgebraDocument& d) {
                               std::vector<std::string> v;
                               for (const auto& p : document_pairs(d)) v.push_back(p.name);
                               return v;
                             })
      .def("serialize", [](const AlgebraDocument& d) { return serialize(d); })
      .def("__repr__", [](const AlgebraDocument& d) {
        return "<Document " + d.algebra.name() + " (" + std::to_string(d.algebra.size()) + " elements)>";
      });

  m.def("check", &check, py::arg("doc"));
  m.def("mop", &mop, py::arg("doc"), py::arg("mode") = "plain", py::arg("unpruned") = false);
  m.def("systems", &systems, py::arg("doc"), py::arg("pairs") = std::vector<std::string>{});
  m.def("generated", &generated, py::arg("doc"), py::arg("elements"));
  m.def("verify", &verify, py::arg("doc"), py::arg("pairs") = std::vector<std::string>{},
        py::arg("laws") = std::vector<std::string>{}, py::arg("conjectures") = false, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("search", &search, py::arg("law") = "", py::arg("min_size") = 1, py::arg("max_size") = 4,
        py::arg("require") = std::vector<std::string>{}, py::arg("forbid") = std::vector<std::string>{},
        py::arg("iso") = true, py::arg("prune") = true, py::arg("budget") = 0, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("laws", [] { return report::catalog().dump(); });
  m.attr("__version__") = std::string(report::kVersion);
}

// Thin pybind11 layer. JSON crosses the boundary as text; the Python package
// converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qbr/closure.hpp"
#include "qbr/error.hpp"
#include "qbr/ext_exchange.hpp"
#include "qbr/jacobson.hpp"
#include "qbr/quasi.hpp"
#include "qbr/regular.hpp"
#include "qbr/ring_spec.hpp"
#include "qbr/suites.hpp"

namespace py = pybind11;
using json = nlohmann::json;
using namespace qbr;

namespace {

std::vector<Elem> members(const Subset& s) { return s.elements(); }

void check_elem(const FiniteRing& r, Elem a) {
  if (!r.contains(a)) throw Error(ErrorCode::ForeignElement, "index " + std::to_string(a) + " out of range");
}

std::string report(const std::string& command, const json& spec, const FiniteRing& r,
                   const std::vector<CheckRecord>& checks) {
  json out = make_report(command, spec, &r, checks, false);
  out["exit_code"] = exit_code(checks);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite ring QB-ring checks";
  m.attr("__version__") = kToolVersion;

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error.ptr())(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("label", &FiniteRing::label)
      .def_property_readonly("unital", &FiniteRing::unital)
      .def_property_readonly("one", &FiniteRing::one)
      .def("add", [](const FiniteRing& r, Elem a, Elem b) { check_elem(r, a); check_elem(r, b); return r.add(a, b); })
      .def("mul", [](const FiniteRing& r, Elem a, Elem b) { check_elem(r, a); check_elem(r, b); return r.mul(a, b); })
      .def("neg", [](const FiniteRing& r, Elem a) { check_elem(r, a); return r.neg(a); })
      .def("__repr__", [](const FiniteRing& r) {
        return "<Ring " + r.label() + " order " + std::to_string(r.order()) + ">";
      });

  m.def("_build", [](const std::string& spec) { return build_ring(json::parse(spec)); }, py::arg("spec"));

  m.def("units", [](const FiniteRing& r) { return members(units(r)); });
  m.def("quasi_invertibles", [](const FiniteRing& r) { return members(quasi_invertibles(r)); });
  m.def("idempotents", [](const FiniteRing& r) { return members(idempotents(r)); });
  m.def("regular_elements", [](const FiniteRing& r) { return members(regular_elements(r)); });
  m.def("quasi_inverse", [](const FiniteRing& r, Elem u) -> std::optional<Elem> {
    check_elem(r, u);
    const auto w = quasi_invertible(r, u);
    if (!w) return std::nullopt;
    return w->v;
  });
  m.def("is_b_ring", [](const FiniteRing& r) { return is_b_ring(r).holds; });
  m.def("is_qb_ring", [](const FiniteRing& r) { return is_qb_ring(r).holds; });
  m.def("is_qb_nonunital", [](const FiniteRing& r) { return is_qb_nonunital(r).holds; });
  m.def("is_exchange_ring", [](const FiniteRing& r) { return is_exchange_ring(r); });

  m.def("_check", [](const std::string& spec, const FiniteRing& r, const std::string& property) {
    return report("check", json::parse(spec), r, {run_property(property, r)});
  });
  m.def("_sets", [](const std::string& spec, const FiniteRing& r, const std::string& set) {
    return report("sets", json::parse(spec), r, {run_set(set, r)});
  });
  m.def("_verify", [](const std::string& spec, const FiniteRing& r, const std::string& suite, std::uint64_t seed) {
    py::gil_scoped_release release;
    return report("verify", json::parse(spec), r, run_suite(suite, r, SuiteOptions{seed, 1}));
  });
  m.def("suites", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : suite_catalog()) out.emplace_back(s.name, s.checks);
    return out;
  });

  m.def("laurent_image", [](const std::string& text, unsigned p) {
    return jacobson::laurent_to_string(jacobson::laurent_image(jacobson::parse(text, p)));
  }, py::arg("text"), py::arg("p") = 2);
  m.def("jacobson_normal_form", [](const std::string& text, unsigned p) {
    return jacobson::parse(text, p).to_string();
  }, py::arg("text"), py::arg("p") = 2);
}

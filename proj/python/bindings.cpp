/*
   Copyright 2026 The semiart Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiart/ordinal.hpp"
#include "semiart/poset.hpp"
#include "semiart/ring.hpp"
#include "semiart/verify.hpp"

namespace py = pybind11;
using semiart::Ordinal;
using semiart::PolarizedPoset;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
PolarizedPoset poset_from_text(const std::string& text) {
  return PolarizedPoset::from_json(nlohmann::json::parse(text));
}

std::vector<std::vector<std::string>> named(const PolarizedPoset& p, const std::vector<semiart::Mask>& masks) {
  std::vector<std::vector<std::string>> out;
  for (auto m : masks) out.push_back(p.subset_names(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core bindings for the semiart library";

  py::register_exception<semiart::PosetError>(m, "PosetError", PyExc_ValueError);
  py::register_exception<semiart::ResourceBound>(m, "ResourceBound", PyExc_RuntimeError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init<std::uint64_t>(), py::arg("n") = 0)
      .def_static("parse", &Ordinal::parse)
      .def_static("omega_pow", &Ordinal::omega_pow, py::arg("e"), py::arg("c") = 1)
      .def("is_finite", &Ordinal::is_finite)
      .def("degree", &Ordinal::degree)
      .def("coef", &Ordinal::coef)
      .def("__str__", &Ordinal::str)
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + a.str() + "')"; })
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(a.str())); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__pow__", [](const Ordinal& a, const Ordinal& b) { return semiart::power(a, b); })
      .def("divmod", [](const Ordinal& a, const Ordinal& b) { return semiart::divide(a, b); });
  py::implicitly_convertible<std::uint64_t, Ordinal>();

  py::class_<PolarizedPoset>(m, "Poset")
      .def_static("from_json_text", &poset_from_text)
      .def("to_json_text", [](const PolarizedPoset& p) { return p.to_json().dump(); })
      .def_property_readonly("elements", &PolarizedPoset::names)
      .def_property_readonly("xi", &PolarizedPoset::xi)
      .def_property_readonly("beth", &PolarizedPoset::beth)
      .def("leq", [](const PolarizedPoset& p, const std::string& a, const std::string& b) {
        return p.leq(p.index_of(a), p.index_of(b));
      })
      .def("layers", [](const PolarizedPoset& p) { return named(p, p.layers()); })
      .def("maximal_chains", [](const PolarizedPoset& p) { return named(p, p.maximal_chains()); })
      .def("components", [](const PolarizedPoset& p) { return named(p, p.connected_components()); })
      .def("hasse_dot", &PolarizedPoset::hasse_dot, py::arg("graph_name") = "poset")
      .def("__len__", &PolarizedPoset::size);

  m.def(
      "analyze_text",
      [](const PolarizedPoset& p, int max_upper_sets) { return semiart::analyze_poset(p, max_upper_sets).dump(); },
      py::arg("poset"), py::arg("max_upper_sets") = 12);

  m.def(
      "verify_text",
      [](const PolarizedPoset& p, std::uint32_t base, std::uint32_t prime, std::uint32_t budget, std::uint64_t seed,
         int samples, int max_upper_sets, std::vector<std::string> only) {
        semiart::VerifyConfig cfg;
        cfg.base = base;
        cfg.prime = prime;
        cfg.budget = budget;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.max_upper_sets = max_upper_sets;
        cfg.only.insert(only.begin(), only.end());
        semiart::VerifyReport rep;
        {
          py::gil_scoped_release release;
          rep = semiart::verify_poset(p, cfg);
        }
        return std::make_pair(rep.exit_code(), rep.to_json().dump());
      },
      py::arg("poset"), py::arg("base") = 3, py::arg("prime") = 5, py::arg("budget") = 2, py::arg("seed") = 1,
      py::arg("samples") = 200, py::arg("max_upper_sets") = 12, py::arg("only") = std::vector<std::string>{});

  m.def("check_names", &semiart::check_names);

  m.def(
      "simp_dot",
      [](const PolarizedPoset& p, std::uint32_t prime, std::uint32_t budget) {
        semiart::RingContext ctx(p, prime);
        auto simp = semiart::simp_poset(ctx, semiart::generator_family(ctx, budget));
        return std::make_pair(semiart::order_isomorphic(p, simp), simp.hasse_dot("simp"));
      },
      py::arg("poset"), py::arg("prime") = 5, py::arg("budget") = 1);
}

// Copyright 2026 The padic-dynamics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "padic/cli.hpp"
#include "padic/condense.hpp"
#include "padic/dynamics.hpp"
#include "padic/formal_group.hpp"
#include "padic/json_io.hpp"
#include "padic/parse.hpp"
#include "padic/semiconj.hpp"

namespace py = pybind11;
using namespace padic;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
using PyRing = std::shared_ptr<RingSpec>;
PyRing to_py_ring(const Ring& r) { return std::const_pointer_cast<RingSpec>(r); }

py::int_ to_py(const mpz_class& x) { return py::int_(py::str(x.get_str())); }

mpz_class from_py(const py::int_& x) { return mpz_class(py::str(x).cast<std::string>()); }

py::list coords(const Zq& x) {
  py::list out;
  for (const auto& c : x.coords()) out.append(to_py(c));
  return out;
}

Zq make_zq(const PyRing& r, const py::object& v) {
  if (py::isinstance<py::str>(v)) return parse_constant(v.cast<std::string>(), r);
  if (py::isinstance<py::int_>(v)) return Zq(r, from_py(v.cast<py::int_>()));
  std::vector<mpz_class> c;
  for (const auto& x : v.cast<py::list>()) c.push_back(from_py(x.cast<py::int_>()));
  return Zq(r, std::move(c));
}

SolverPath path_from(const std::string& s) {
  if (s == "auto") return SolverPath::Auto;
  if (s == "direct") return SolverPath::Direct;
  if (s == "contraction") return SolverPath::Contraction;
  fail(ErrorKind::InvalidArgument, "path must be auto, direct or contraction");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic power series, Lubin-Tate formal groups and dynamics";

  // Instances carry the error kind name in `.kind`.
  static py::handle exc = py::exception<Error>(m, "PadicError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(exc)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<RingSpec, PyRing>(m, "Ring")
      .def(py::init([](unsigned long p, unsigned f, unsigned precN, std::vector<long> modulus) {
             std::vector<mpz_class> mod(modulus.begin(), modulus.end());
             return to_py_ring(RingSpec::make(p, f, precN, mod));
           }),
           py::arg("p"), py::arg("f") = 1, py::arg("precN") = 8, py::arg("modulus") = std::vector<long>{})
      .def_property_readonly("p", &RingSpec::p)
      .def_property_readonly("f", &RingSpec::f)
      .def_property_readonly("precN", &RingSpec::precN)
      .def_property_readonly("modulus", [](const RingSpec& r) {
        py::list out;
        for (const auto& c : r.modulus()) out.append(to_py(c));
        return out;
      })
      .def("with_precision", [](const RingSpec& r, unsigned n) { return to_py_ring(r.with_precision(n)); })
      .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
      .def("__repr__", &RingSpec::describe);

  py::class_<Zq>(m, "Zq")
      .def(py::init(&make_zq), py::arg("ring"), py::arg("value"))
      .def_static("teichmuller", [](const PyRing& r, const std::vector<unsigned long>& res) { return Zq::teichmuller(r, res); })
      .def_property_readonly("ring", [](const Zq& x) { return to_py_ring(x.ring()); })
      .def_property_readonly("coords", &coords)
      .def_property_readonly("valuation", &Zq::valuation)
      .def("is_unit", &Zq::is_unit)
      .def("inverse", &Zq::inverse)
      .def("frobenius", &Zq::frobenius, py::arg("k") = 1)
      .def("residue", &Zq::residue)
      .def("__pow__", [](const Zq& a, unsigned long e) { return a.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &Zq::to_string);

  py::class_<Series>(m, "Series")
      .def(py::init([](const std::string& text, const PyRing& r, unsigned m) { return parse_series_literal(text, r, m); }),
           py::arg("text"), py::arg("ring"), py::arg("precT"))
      .def_property_readonly("ring", [](const Series& s) { return to_py_ring(s.ring()); })
      .def_property_readonly("precN", &Series::precN)
      .def_property_readonly("precT", &Series::precT)
      .def_property_readonly("coeffs", [](const Series& s) {
        py::list out;
        for (const auto& c : s.coeffs()) out.append(coords(c));
        return out;
      })
      .def("__getitem__", &Series::operator[])
      .def("frobenius", &Series::frobenius, py::arg("k") = 1)
      .def("reciprocal", &Series::reciprocal)
      .def("__pow__", [](const Series& s, unsigned long e) { return s.pow(e); })
      .def("__call__", [](const Series& outer, const Series& inner) { return compose(outer, inner); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("to_json", [](const Series& s) { return series_to_json(s).dump(); })
      .def("__repr__", &Series::to_string);

  m.def("compose", py::overload_cast<const Series&, const Series&>(&compose));
  m.def("comp_inverse", &comp_inverse);
  m.def("iterate", &iterate);
  m.def("weierstrass_degree", &weierstrass_degree);
  m.def("newton_polygon", [](const Series& s) { return newton_polygon_to_json(newton_polygon(s)).dump(); });

  py::class_<FormalGroup>(m, "FormalGroup")
      .def_property_readonly("precN", &FormalGroup::precN)
      .def_property_readonly("precD", &FormalGroup::precD)
      .def_property_readonly("working_precision", &FormalGroup::working_precision)
      .def("endomorphism", &FormalGroup::endomorphism)
      .def("eval", [](const FormalGroup& G, const Series& a, const Series& b) { return bi_eval(G.law(), a, b); })
      .def("axioms_hold", [](const FormalGroup& G) { return verify_group_axioms(G).all(); })
      .def("functional_equation_holds", [](const FormalGroup& G) { return functional_equation_defect(G).holds; })
      .def("to_json", [](const FormalGroup& G) { return formal_group_to_json(G).dump(); });

  m.def(
      "build_formal_group",
      [](const Series& f, unsigned twist, unsigned precD, const std::string& path) {
        py::gil_scoped_release release;
        return build_formal_group(FrobeniusSeries::make(f, twist), precD ? precD : f.precT(), path_from(path));
      },
      py::arg("f"), py::arg("twist") = 1, py::arg("precD") = 0, py::arg("path") = "auto");

  m.def("lubin_log", [](const Series& P, unsigned effPrec) {
    return log_series_to_json(lubin_log(StableNoninvertible::make(P), effPrec).log).dump();
  });
  m.def("commutant", [](const Series& P, const Zq& c) { return commutant(StableNoninvertible::make(P), c); });
  m.def("normalize_fixed_point", [](const Series& Q) {
    const FixedPointNormalization r = normalize_fixed_point(Q);
    return py::make_tuple(r.a, r.shifted);
  });
  m.def("check_phi_iterate_seed", &check_phi_iterate_seed);
  m.def("root_valuation_profile", [](const Series& P, unsigned n) {
    py::list out;
    for (const auto& s : root_valuation_profile(StableNoninvertible::make(P), n))
      out.append(py::make_tuple(s.slope.to_string(), s.multiplicity));
    return out;
  });

  py::class_<CondensationSetup>(m, "CondensationSetup")
      .def_readonly("R", &CondensationSetup::R)
      .def_readonly("d", &CondensationSetup::d)
      .def("condense", [](const CondensationSetup& s, const Zq& a) { return condense(s, a); })
      .def("laws_hold", [](const CondensationSetup& s, const std::vector<Zq>& samples) {
        return verify_condensation_laws(s, samples).all();
      });
  m.def("norm_series", &norm_series);

  m.def(
      "verify_semiconj",
      [](const Series& F, const Series& G, const Series& h, unsigned twist) {
        const SemiConjReport r = verify_semiconj({F, G, h, twist});
        return py::make_tuple(r.holds, r.firstFailingDegree);
      },
      py::arg("F"), py::arg("G"), py::arg("h"), py::arg("twist") = 0);
  m.def(
      "solve_semiconj",
      [](const Series& F, const Series& G, const Zq& c, unsigned twist) {
        return solve_semiconj(StableNoninvertible::make(F), StableNoninvertible::make(G), c, twist);
      },
      py::arg("F"), py::arg("G"), py::arg("c"), py::arg("twist") = 0);

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "padic-dynamics");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

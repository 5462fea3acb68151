// Python bindings. Rationals cross the boundary as fractions.Fraction, JSON
// shaped results as plain dicts/lists (parsed from the C++ JSON emitters).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypersig/catalog.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/io.hpp"
#include "hypersig/semicontinuity.hpp"
#include "hypersig/signatures.hpp"

namespace py = pybind11;
using namespace hypersig;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::object big_int(const Rational& q) { return py::module_::import("builtins").attr("int")(q.get_num().get_str()); }

Rational to_rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SeifertMatrix make_seifert(int n, const py::sequence& rows, std::optional<std::string> name) {
  const std::size_t k = py::len(rows);
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    py::sequence row = rows[i];
    if (py::len(row) != k) throw InputError("matrix is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < k; ++j) {
      py::handle v = row[j];
      if (!py::isinstance<py::int_>(v)) throw InputError("matrix entries must be integers");
      m(i, j) = to_rational(v);
    }
  }
  return SeifertMatrix(n, std::move(m), std::move(name));
}

NumericOptions numeric(double tol, int precision) {
  NumericOptions o;
  o.relative_tol = tol;
  o.precision_bits = precision;
  return o;
}

}  // namespace

PYBIND11_MODULE(_hypersig, m) {
  m.doc() = "Seifert matrices, Levine-Tristram signatures, spectra and semicontinuity";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<InputError> input(m, "InputError", base.ptr());
  static py::exception<SingularMatrixError> singular(m, "SingularMatrixError", base.ptr());
  static py::exception<OffCircleError> off_circle(m, "OffCircleError", base.ptr());
  static py::exception<PrecisionError> precision(m, "PrecisionError", base.ptr());
  static py::exception<CalibrationError> calibration(m, "CalibrationError", base.ptr());
  static py::exception<UnsupportedError> unsupported(m, "UnsupportedError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input, e.what());
    } catch (const SingularMatrixError& e) {
      py::set_error(singular, e.what());
    } catch (const OffCircleError& e) {
      py::set_error(off_circle, e.what());
    } catch (const PrecisionError& e) {
      py::set_error(precision, e.what());
    } catch (const CalibrationError& e) {
      py::set_error(calibration, e.what());
    } catch (const UnsupportedError& e) {
      py::set_error(unsupported, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<SeifertMatrix>(m, "SeifertMatrix")
      .def(py::init(&make_seifert), py::arg("n"), py::arg("matrix"), py::arg("name") = std::nullopt)
      .def_property_readonly("n", &SeifertMatrix::n)
      .def_property_readonly("mu", &SeifertMatrix::mu)
      .def_property_readonly("epsilon", &SeifertMatrix::epsilon)
      .def_property_readonly("name", &SeifertMatrix::name)
      .def_property_readonly("matrix",
                             [](const SeifertMatrix& s) {
                               py::list rows;
                               for (std::size_t i = 0; i < s.mu(); ++i) {
                                 py::list row;
                                 for (std::size_t j = 0; j < s.mu(); ++j) row.append(big_int(s.matrix()(i, j)));
                                 rows.append(row);
                               }
                               return rows;
                             })
      .def("padded", &SeifertMatrix::padded, py::arg("k"))
      .def("__repr__", [](const SeifertMatrix& s) {
        return "SeifertMatrix(n=" + std::to_string(s.n()) + ", mu=" + std::to_string(s.mu()) +
               (s.name() ? ", name='" + *s.name() + "'" : std::string()) + ")";
      });

  m.def("catalog", [](const std::string& name) { return catalog_entry(name); }, py::arg("name"));
  m.def("brieskorn", &brieskorn, py::arg("exponents"));
  m.def(
      "brieskorn_spectrum_oracle",
      [](const std::vector<int>& e) {
        py::list out;
        for (const auto& v : brieskorn_spectrum_oracle(e)) out.append(fraction(v));
        return out;
      },
      py::arg("exponents"));
  m.def(
      "parse_seifert_json", [](const std::string& text) { return parse_seifert_json(text); }, py::arg("text"));

  m.def(
      "alexander",
      [](const SeifertMatrix& s) {
        py::list out;
        const RatPoly d = alexander(s);
        for (int k = 0; k <= d.degree(); ++k) out.append(big_int(d.coeff(k)));
        return out;
      },
      py::arg("s"), "Normalized Alexander polynomial, coefficients lowest degree first.");
  m.def("n0", [](const SeifertMatrix& s) { return n0(s); }, py::arg("s"));
  m.def(
      "invariants",
      [](const SeifertMatrix& s, double tol, int precision) {
        return from_json(invariants_json(s, numeric(tol, precision)));
      },
      py::arg("s"), py::arg("tol") = 1e-9, py::arg("precision") = 64);

  m.def(
      "signature",
      [](const SeifertMatrix& s, const py::object& alpha, double tol) {
        return lt_signature(s, CirclePoint(to_rational(alpha)), numeric(tol, 64));
      },
      py::arg("s"), py::arg("alpha"), py::arg("tol") = 1e-9, "Levine-Tristram signature at xi = exp(2 pi i alpha).");
  m.def(
      "nullity",
      [](const SeifertMatrix& s, const py::object& alpha) {
        return lt_nullity_exact(s, CirclePoint(to_rational(alpha)));
      },
      py::arg("s"), py::arg("alpha"));
  m.def(
      "profile_csv",
      [](const SeifertMatrix& s, const std::vector<py::object>& grid, double tol) {
        std::vector<Rational> g;
        for (const auto& x : grid) g.push_back(to_rational(x));
        return profile_csv(s, g, numeric(tol, 64));
      },
      py::arg("s"), py::arg("grid") = std::vector<py::object>{}, py::arg("tol") = 1e-9);

  m.def(
      "spectrum",
      [](const SeifertMatrix& s, double tol, int precision) {
        return from_json(to_json(extract_spectrum(s, numeric(tol, precision))));
      },
      py::arg("s"), py::arg("tol") = 1e-9, py::arg("precision") = 64,
      "Mod-2 spectrum as a list of {'value': 'p/q', 'multiplicity': k}.");
  m.def(
      "mod2_reduce",
      [](const std::vector<py::object>& values, int n) {
        std::vector<Rational> v;
        for (const auto& x : values) v.push_back(to_rational(x));
        return from_json(to_json(mod2_reduce(v, n)));
      },
      py::arg("values"), py::arg("n"));

  m.def(
      "check_local",
      [](const SeifertMatrix& central, const std::vector<SeifertMatrix>& locals, bool strict) {
        DeformationInstance inst{central.name().value_or("central"), central, locals, false, true};
        SemicontinuityOptions so;
        so.strict = strict;
        return from_json(to_json(check_local(inst, so)));
      },
      py::arg("central"), py::arg("locals"), py::arg("strict") = false);
  m.def(
      "check",
      [](const std::string& scenario_json, double tol) {
        return from_json(to_json(run_scenario(parse_scenario(scenario_json), numeric(tol, 64))));
      },
      py::arg("scenario_json"), py::arg("tol") = 1e-9, "Run a scenario given as JSON text; returns the report.");
  m.def(
      "murasugi_kawauchi",
      [](const SeifertMatrix& central, const std::vector<SeifertMatrix>& locals, const py::object& alpha,
         long smoothing_betti) {
        const auto r = local_global_bound(central, locals, CirclePoint(to_rational(alpha)), smoothing_betti);
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("central"), py::arg("locals"), py::arg("alpha"), py::arg("smoothing_betti"));
}

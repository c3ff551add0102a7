#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "hopfsuper/analysis.hpp"
#include "hopfsuper/characters.hpp"
#include "hopfsuper/error.hpp"
#include "hopfsuper/json_io.hpp"
#include "hopfsuper/presentation.hpp"
#include "hopfsuper/suites.hpp"
#include "hopfsuper/superdata.hpp"

namespace py = pybind11;
using namespace hopfsuper;

namespace {

CycloScalar scalar_from_py(const py::object& o) {
  if (py::isinstance<CycloScalar>(o)) return o.cast<CycloScalar>();
  if (py::isinstance<py::int_>(o)) return CycloScalar(Rational(py::str(o).cast<std::string>()));
  if (py::isinstance<py::str>(o)) return scalar_from_json(Json(o.cast<std::string>()));
  throw py::type_error("expected CycloScalar, int or 'p/q' string");
}

Vec vec_from_py(const py::iterable& it) {
  Vec v;
  for (const auto& o : it) v.push_back(scalar_from_py(py::reinterpret_borrow<py::object>(o)));
  return v;
}

std::vector<std::vector<CycloScalar>> rows_of(const Matrix& m) {
  std::vector<std::vector<CycloScalar>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

Matrix matrix_from_py(const py::iterable& rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) rs.push_back(vec_from_py(py::reinterpret_borrow<py::iterable>(r)));
  return Matrix::from_rows(rs, rs.empty() ? 0 : rs[0].size());
}

// Reports travel as Python dicts through their JSON form.
py::object as_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict report_dict(const Report& r) { return as_py(to_json(r)).cast<py::dict>(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hopf superalgebras over cyclotomic fields";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<CycloScalar>(m, "CycloScalar")
      .def(py::init([](const py::object& o) { return scalar_from_py(o); }), py::arg("value") = 0)
      .def_static("zeta", &CycloScalar::zeta, py::arg("n"), py::arg("k") = 1)
      .def_static("sqrt2", &CycloScalar::sqrt2)
      .def_property_readonly("conductor", &CycloScalar::conductor)
      .def_property_readonly("coeffs",
                             [](const CycloScalar& s) {
                               std::vector<std::string> c;
                               for (const auto& q : s.coeffs()) c.push_back(q.get_str());
                               return c;
                             })
      .def("embed", &CycloScalar::embed)
      .def("galois", &CycloScalar::galois)
      .def("is_zero", &CycloScalar::is_zero)
      .def("__complex__",
           [](const CycloScalar& s) {
             const double pi = 3.14159265358979323846;
             std::complex<double> z = std::polar(1.0, 2 * pi / s.conductor()), acc = 0, p = 1;
             for (const auto& q : s.coeffs()) acc += q.get_d() * p, p *= z;
             return acc;
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__add__", [](const CycloScalar& a, const py::object& b) { return a + scalar_from_py(b); })
      .def("__radd__", [](const CycloScalar& a, const py::object& b) { return scalar_from_py(b) + a; })
      .def("__sub__", [](const CycloScalar& a, const py::object& b) { return a - scalar_from_py(b); })
      .def("__rsub__", [](const CycloScalar& a, const py::object& b) { return scalar_from_py(b) - a; })
      .def("__mul__", [](const CycloScalar& a, const py::object& b) { return a * scalar_from_py(b); })
      .def("__rmul__", [](const CycloScalar& a, const py::object& b) { return scalar_from_py(b) * a; })
      .def("__truediv__", [](const CycloScalar& a, const py::object& b) { return a / scalar_from_py(b); })
      .def("__pow__", [](const CycloScalar& a, long e) {
        CycloScalar r(1), b = e < 0 ? CycloScalar(1) / a : a;
        for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
        return r;
      })
      .def("__eq__", [](const CycloScalar& a, const py::object& b) { return a == scalar_from_py(b); })
      .def("__hash__", [](const CycloScalar& s) { return py::hash(py::str(s.to_string())); })
      .def("__str__", &CycloScalar::to_string)
      .def("__repr__", [](const CycloScalar& s) { return "CycloScalar(" + s.to_string() + ")"; });

  py::class_<HopfSuperData>(m, "HopfSuperData")
      .def_readonly("name", &HopfSuperData::name)
      .def_readonly("conductor", &HopfSuperData::conductor)
      .def_readonly("labels", &HopfSuperData::labels)
      .def_readonly("parity", &HopfSuperData::parity)
      .def_readonly("unit", &HopfSuperData::unit)
      .def_readonly("counit", &HopfSuperData::counit)
      .def_property_readonly("dim", &HopfSuperData::dim)
      .def_property_readonly("dim_odd", &HopfSuperData::dim_odd)
      .def_property_readonly("purely_even", &HopfSuperData::purely_even)
      .def("element", &HopfSuperData::element)
      .def("basis", &HopfSuperData::basis)
      .def("multiply", [](const HopfSuperData& h, const py::iterable& a,
                          const py::iterable& b) { return h.multiply(vec_from_py(a), vec_from_py(b)); })
      .def("comultiply", [](const HopfSuperData& h, const py::iterable& a) { return rows_of(h.comultiply(vec_from_py(a))); },
           "Delta(a) as rows: entry [j][k] is the coefficient of e_j (x) e_k")
      .def("counit_of", [](const HopfSuperData& h, const py::iterable& a) { return h.apply_counit(vec_from_py(a)); })
      .def("antipode_of", [](const HopfSuperData& h, const py::iterable& a) { return h.apply_antipode(vec_from_py(a)); })
      .def("parity_of", [](const HopfSuperData& h, const py::iterable& a) { return h.parity_of(vec_from_py(a)); })
      .def("format", [](const HopfSuperData& h, const py::iterable& a) { return format_element(h, vec_from_py(a)); })
      .def("to_json", [](const HopfSuperData& h) { return dump(to_json(h)); })
      .def_static("from_json", [](const std::string& s) { return hopf_from_json(Json::parse(s)); })
      .def("__eq__", [](const HopfSuperData& a, const HopfSuperData& b) { return same_structure(a, b); })
      .def("__repr__", [](const HopfSuperData& h) {
        return "<HopfSuperData " + h.name + " dim " + std::to_string(h.dim()) + " odd " + std::to_string(h.dim_odd()) +
               ">";
      });

  py::class_<CompiledPresentation>(m, "Presentation")
      .def_readonly("hopf", &CompiledPresentation::hopf)
      .def("evaluate", [](const CompiledPresentation& c, const std::string& e) { return evaluate(c, e); })
      .def("extend", [](const CompiledPresentation& c, const HopfSuperData& target, const std::vector<py::iterable>& images) {
        std::vector<Vec> im;
        for (const auto& i : images) im.push_back(vec_from_py(i));
        return rows_of(extend_generator_map(c, target, im));
      });

  py::class_<SuperDatum>(m, "SuperDatum")
      .def_readonly("g", &SuperDatum::g)
      .def_readonly("alpha", &SuperDatum::alpha)
      .def_readonly("g_label", &SuperDatum::g_label)
      .def_readonly("alpha_label", &SuperDatum::alpha_label)
      .def_property_readonly("admissible", &SuperDatum::admissible)
      .def_property_readonly("is_super", &SuperDatum::is_super)
      .def_property_readonly("certificates", [](const SuperDatum& d) { return as_py(to_json(d)["certificates"]); })
      .def("__repr__", [](const SuperDatum& d) { return "<SuperDatum (" + d.g_label + ", " + d.alpha_label + ")>"; });

  m.def("builtin_names", &builtin_names);
  m.def("builtin", &builtin, py::arg("name"));
  m.def("builtin_presentation", &builtin_presentation, py::arg("name"));
  m.def("builtin_source", &builtin_source, py::arg("name"));
  m.def("compile", [](const std::string& text) { return compile(text); }, py::arg("text"));
  m.def("compile_presentation", [](const std::string& text) { return compile_presentation(parse_presentation(text)); },
        py::arg("text"));
  m.def("render", &render);

  m.def("verify_axioms", [](const HopfSuperData& h) { return report_dict(verify_axioms(h)); });
  m.def("dual", [](const HopfSuperData& h) { return dual(h); });
  m.def("tensor_product", [](const HopfSuperData& a, const HopfSuperData& b) { return tensor_product(a, b); });
  m.def("verify_isomorphism", [](const HopfSuperData& a, const HopfSuperData& b, const py::iterable& rows) {
    return report_dict(verify_isomorphism(a, b, matrix_from_py(rows)));
  });
  m.def("verify_pairing", [](const HopfSuperData& k, const HopfSuperData& h, const py::iterable& rows) {
    return report_dict(verify_pairing(k, h, matrix_from_py(rows)));
  });

  m.def("admissible_data", &admissible_data);
  m.def("super_data", py::overload_cast<const HopfSuperData&>(&super_data));
  m.def("coinvariant_superalgebra", [](const HopfSuperData& a, const SuperDatum& d) {
    return coinvariant_superalgebra(a, d).h;
  });
  m.def("bosonize", [](const HopfSuperData& h) { return bosonize(h).a; });
  m.def("canonical_datum", [](const HopfSuperData& h) { return canonical_datum(bosonize(h)); },
        "canonical datum of bosonize(h)");
  m.def("verify_bosonization_roundtrip",
        [](const HopfSuperData& a, const SuperDatum& d) { return report_dict(verify_bosonization_roundtrip(a, d)); });
  m.def("aeg_superize", [](const HopfSuperData& h, const py::iterable& c) { return aeg_superize(h, vec_from_py(c)); });
  m.def("grouplikes", [](const HopfSuperData& h, bool unrestricted) {
    return grouplikes(h, unrestricted ? GrouplikeMode::Unrestricted : GrouplikeMode::EvenHomogeneous).elements;
  }, py::arg("h"), py::arg("unrestricted") = false);
  m.def("characters", &hopf_characters);

  m.def("fingerprint", [](const HopfSuperData& h) { return as_py(to_json(fingerprint(h))); });
  m.def("distinguish", [](const HopfSuperData& a, const HopfSuperData& b) { return distinguish(a, b); });
  m.def("is_semisimple", &is_semisimple);
  m.def("is_pointed", &is_pointed);
  m.def("antipode_spectrum", [](const HopfSuperData& h) { return as_py(to_json(antipode_spectrum(h))); });
  m.def(
      "find_isomorphism",
      [](const CompiledPresentation& src, const HopfSuperData& target, std::uint64_t fuel, int conductor) {
        IsoSearchOptions o;
        o.fuel = fuel;
        o.conductor = conductor;
        IsoSearchResult r = find_isomorphism(src, target, o);
        py::dict d;
        d["outcome"] = outcome_name(r.outcome);
        d["detail"] = r.detail;
        d["tried"] = r.tried;
        d["witness"] = r.witness ? py::cast(rows_of(*r.witness)) : py::none();
        return d;
      },
      py::arg("src"), py::arg("target"), py::arg("fuel") = 100000, py::arg("conductor") = 8);

  m.def(
      "superforms",
      [](const HopfSuperData& a, bool identify) { return as_py(to_json(superforms(a, {}, identify))); },
      py::arg("a"), py::arg("identify") = true);
  m.def("identify_builtin", [](const HopfSuperData& h) { return identify_builtin(h); });
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, int conductor, std::uint64_t fuel) {
        return as_py(to_json(run_suite(name, SuiteOptions{conductor, fuel}), true));
      },
      py::arg("name"), py::arg("conductor") = 8, py::arg("fuel") = 100000);
}

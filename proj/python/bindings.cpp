#include "anstar/commands.hpp"
#include "anstar/render.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace anstar;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational::parse(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
  // fractions.Fraction and anything else exposing numerator/denominator.
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    const std::string num = py::str(h.attr("numerator")).cast<std::string>();
    const std::string den = py::str(h.attr("denominator")).cast<std::string>();
    return Rational::parse(num + "/" + den);
  }
  throw py::type_error("expected int, str or Fraction");
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

LatticeVector make_vector(int n, const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const auto& h : coeffs) c.push_back(to_rational(h));
  if (c.size() != static_cast<std::size_t>(n + 1)) throw py::value_error("expected n+1 coefficients");
  return LatticeVector(n, c);
}

GoldenVec2 window_arg(const py::object& o, GoldenVec2 fallback) {
  if (o.is_none()) return fallback;
  if (py::isinstance<py::str>(o)) return parse_window_point(o.cast<std::string>());
  auto seq = o.cast<py::sequence>();
  if (seq.size() != 2) throw py::value_error("expected a pair (x, y)");
  return {GoldenNumber(to_rational(seq[0])), GoldenNumber(to_rational(seq[1]))};
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact A_n* Voronoi cells, Weyl orbits and Coxeter-plane tilings";
  m.attr("__version__") = ANSTAR_VERSION;

  py::register_exception<NonGenericError>(m, "NonGenericError", PyExc_ValueError);

  py::class_<GoldenNumber>(m, "GoldenNumber")
      .def(py::init([](const py::object& a, const py::object& b) { return GoldenNumber(to_rational(a), to_rational(b)); }),
           py::arg("a") = 0, py::arg("b") = 0)
      .def_static("tau", &GoldenNumber::tau)
      .def_static("sqrt5", &GoldenNumber::sqrt5)
      .def_property_readonly("a", [](const GoldenNumber& g) { return fraction(g.rational_part()); })
      .def_property_readonly("b", [](const GoldenNumber& g) { return fraction(g.sqrt5_part()); })
      .def("conjugate", &GoldenNumber::conjugate)
      .def("norm", [](const GoldenNumber& g) { return fraction(g.norm()); })
      .def("sign", &GoldenNumber::sign)
      .def("__float__", &GoldenNumber::to_double)
      .def("__str__", &GoldenNumber::str)
      .def("__repr__", [](const GoldenNumber& g) { return "GoldenNumber(" + g.str() + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const GoldenNumber& g) { return std::hash<std::string>{}(g.str()); });

  py::class_<LatticeVector>(m, "LatticeVector")
      .def(py::init(&make_vector), py::arg("n"), py::arg("coeffs"))
      .def_property_readonly("rank", &LatticeVector::rank)
      .def_property_readonly("coeffs", [](const LatticeVector& v) {
        py::list out;
        for (const auto& c : v.coeffs()) out.append(fraction(c));
        return out;
      })
      .def("weight_coordinates", [](const LatticeVector& v) {
        py::list out;
        for (const auto& c : v.weight_coordinates()) out.append(fraction(c));
        return out;
      })
      .def("in_weight_lattice", &LatticeVector::in_weight_lattice)
      .def("in_root_lattice", &LatticeVector::in_root_lattice)
      .def("expression", &k_expression)
      .def("__str__", &LatticeVector::str)
      .def("__repr__", [](const LatticeVector& v) { return "LatticeVector" + v.str(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", &LatticeVector::hash);

  m.def("k_vector", &k_vector, py::arg("n"), py::arg("j"));
  m.def("simple_root", &simple_root, py::arg("n"), py::arg("i"));
  m.def("fundamental_weight", &fundamental_weight, py::arg("n"), py::arg("i"));
  m.def("inner_product", [](const LatticeVector& u, const LatticeVector& v) { return fraction(inner_product(u, v)); });
  m.def("squared_norm", [](const LatticeVector& v) { return fraction(squared_norm(v)); });
  m.def("covering_radius_squared", [](int n) { return fraction(covering_radius_squared(n)); });
  m.def("enumerate_weight_lattice", [](int n, const py::object& r) { return enumerate_weight_lattice(n, to_rational(r)); },
        py::arg("n"), py::arg("radius"));

  py::class_<GroupElement>(m, "GroupElement")
      .def_property_readonly("perm", &GroupElement::perm)
      .def_property_readonly("flip", &GroupElement::flip)
      .def("inverse", &GroupElement::inverse)
      .def("order", &GroupElement::order)
      .def("__call__", [](const GroupElement& g, const LatticeVector& v) { return act(g, v); })
      .def("__str__", &GroupElement::str)
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("parse_word", [](int n, const std::string& w) { return parse_word(n, w); }, py::arg("n"), py::arg("word"));
  m.def("coxeter_element", &coxeter_element, py::arg("n"));
  m.def("weyl_orbit", &weyl_orbit, py::arg("v"));
  m.def("coset_count",
        [](int n, std::vector<int> gens, bool flip) { return coset_count(SubgroupSpec{n, std::move(gens), flip}); },
        py::arg("n"), py::arg("generators"), py::arg("include_flip") = false);

  m.def("face_counts", &face_counts, py::arg("n"));
  m.def("euler_check", &euler_check, py::arg("n"));
  m.def("expected_euler", &expected_euler, py::arg("n"));
  m.def("voronoi_vertices", &voronoi_vertices, py::arg("n"));
  m.def("face_vertex_words", [](const std::vector<std::vector<int>>& blocks) {
    std::vector<std::string> out;
    for (const auto& w : face_vertex_words(Face(blocks))) out.push_back(w.str());
    return out;
  }, py::arg("blocks"));
  m.def("face_center", [](const std::vector<std::vector<int>>& blocks) { return face_center(Face(blocks)); },
        py::arg("blocks"));
  m.def("classify_face", [](const std::vector<std::vector<int>>& blocks) { return to_string(classify_face(Face(blocks))); },
        py::arg("blocks"));
  m.def("classify_all_faces", [] {
    std::map<std::string, long> out;
    for (const auto& [t, c] : classify_all_faces()) out[to_string(t)] = c;
    return out;
  });
  m.def("project", [](const LatticeVector& v) {
    const PlanePoint p = project(v);
    return std::pair{p.x, p.y};
  });
  m.def("projected_sq_length", &projected_sq_length_exact, py::arg("v"));

  m.def("facets", [](int n) { return json_to_py(facets_json(n)); }, py::arg("n"));
  m.def("shadow_tiling", [](const py::object& w) {
    return json_to_py(patch_to_json(shadow_tiling_of_cell(window_arg(w, default_shadow_direction()))));
  }, py::arg("w") = py::none());
  m.def("klotz_patch", [](const py::object& gamma, const py::object& radius) {
    return json_to_py(patch_to_json(klotz_patch(window_arg(gamma, default_window_shift()), to_rational(radius))));
  }, py::arg("gamma") = py::none(), py::arg("radius") = 4);
  m.def("symmetric_patch", [](const py::object& radius) { return json_to_py(patch_to_json(symmetric_patch(to_rational(radius)))); },
        py::arg("radius") = 4);
  m.def("render_svg", [](const std::string& kind, const py::object& param, const py::object& radius, bool color) {
    Patch p;
    if (kind == "cell") {
      p = shadow_tiling_of_cell(window_arg(param, default_shadow_direction()));
    } else if (kind == "symmetric") {
      p = symmetric_patch(to_rational(radius));
    } else if (kind == "patch") {
      p = klotz_patch(window_arg(param, default_window_shift()), to_rational(radius));
    } else {
      throw py::value_error("kind must be 'cell', 'patch' or 'symmetric'");
    }
    RenderStyle style = default_style();
    style.color = color;
    return render_svg(p.tiles, style, kind);
  }, py::arg("kind") = "cell", py::arg("param") = py::none(), py::arg("radius") = 4, py::arg("color") = true);
  m.def("verify", [](int n) {
    py::list out;
    for (const auto& c : verification_checks(n)) {
      py::dict d;
      d["name"] = c.name;
      d["expected"] = c.expected;
      d["actual"] = c.actual;
      d["pass"] = c.pass;
      out.append(d);
    }
    return out;
  }, py::arg("n"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mordell/derivation.hpp"
#include "mordell/family.hpp"
#include "mordell/heights.hpp"
#include "mordell/records.hpp"

namespace py = pybind11;
using namespace mordell;

namespace {

Integer to_integer(const py::handle& value) {
  return parse_integer(py::str(value).cast<std::string>());
}

Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::object from_integer(const Integer& value) {
  return py::module_::import("builtins").attr("int")(to_string(value));
}

// Integral values come back as int, others as fractions.Fraction.
py::object from_rational(const Rational& value) {
  if (value.get_den() == 1) return from_integer(value.get_num());
  return py::module_::import("fractions")
      .attr("Fraction")(from_integer(value.get_num()), from_integer(value.get_den()));
}

py::object from_point(const CurvePoint& p) {
  if (p.is_infinity()) return py::none();
  return py::make_tuple(from_rational(p.x()), from_rational(p.y()));
}

CurvePoint to_point(const py::handle& value) {
  if (value.is_none()) return CurvePoint::infinity();
  auto pair = value.cast<py::sequence>();
  if (pair.size() != 2) throw InvalidArgument("a point is a pair (x, y) or None");
  return CurvePoint(to_rational(pair[0]), to_rational(pair[1]));
}

MordellCurve to_curve(const py::handle& d) { return MordellCurve(to_integer(d)); }

std::vector<CurvePoint> to_points(const py::sequence& seq) {
  std::vector<CurvePoint> out;
  for (const auto& item : seq) out.push_back(to_point(item));
  return out;
}

py::object parse_json(const nlohmann::json& record) {
  return py::module_::import("json").attr("loads")(record.dump());
}

py::tuple height_tuple(const HeightValue& h, unsigned digits) {
  return py::make_tuple(h.value.to_string(static_cast<int>(digits)), h.error_bound.to_string_up(6));
}

}  // namespace

PYBIND11_MODULE(_mordell, m) {
  m.doc() = "Mordell curves y^2 = x^3 + k^2 with three rational points";

  // Translators run most recent first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
  py::register_exception<SingularPoint>(m, "SingularPoint", PyExc_ValueError);
  py::register_exception<TangentContained>(m, "TangentContained", PyExc_ValueError);
  py::register_exception<PrecisionUnreachable>(m, "PrecisionUnreachable", PyExc_ArithmeticError);

  m.def("compute_k", [](py::object a, py::object b, py::object c) {
    return from_integer(compute_k(FamilyParams(to_integer(a), to_integer(b), to_integer(c))));
  }, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("compute_points", [](py::object a, py::object b, py::object c, bool raw) {
    FamilyParams params(to_integer(a), to_integer(b), to_integer(c));
    auto pts = raw ? compute_points_raw(params) : compute_points(params);
    return py::make_tuple(from_point(pts[0]), from_point(pts[1]), from_point(pts[2]));
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("raw") = false,
     "The three family points; raw=True keeps the signs of the closed forms.");

  m.def("build_instance", [](py::object a, py::object b, py::object c) {
    return parse_json(to_json(build_instance(FamilyParams(to_integer(a), to_integer(b), to_integer(c)))));
  }, py::arg("a"), py::arg("b"), py::arg("c"), "Instance record as a dict of decimal strings.");

  m.def("is_on_curve", [](py::object d, py::object p) {
    return is_on_curve(to_curve(d), to_point(p));
  }, py::arg("d"), py::arg("point"));

  m.def("add", [](py::object d, py::object p, py::object q) {
    MordellCurve curve = to_curve(d);
    return from_point(add(curve, to_point(p), to_point(q)));
  }, py::arg("d"), py::arg("p"), py::arg("q"));

  m.def("scalar_mul", [](py::object d, long n, py::object p) {
    MordellCurve curve = to_curve(d);
    return from_point(scalar_mul(curve, n, to_point(p)));
  }, py::arg("d"), py::arg("n"), py::arg("point"));

  m.def("order_of_point", [](py::object d, py::object p) -> std::optional<unsigned> {
    return order_of_point(to_curve(d), to_point(p));
  }, py::arg("d"), py::arg("point"), "Finite order, or None for a point of infinite order.");

  m.def("torsion_subgroup", [](py::object d) {
    MordellCurve curve = to_curve(d);
    return parse_json(to_json(torsion_subgroup(curve), curve));
  }, py::arg("d"));

  m.def("canonical_height", [](py::object d, py::object p, unsigned digits) {
    HeightValue h = canonical_height(to_curve(d), to_point(p), {digits});
    return height_tuple(h, digits);
  }, py::arg("d"), py::arg("point"), py::arg("digits") = 30,
     "(value, error_bound) as decimal strings.");

  m.def("regulator", [](py::object d, py::sequence points, unsigned digits) {
    HeightValue r = regulator(to_curve(d), to_points(points), {digits});
    return height_tuple(r, digits);
  }, py::arg("d"), py::arg("points"), py::arg("digits") = 30);

  m.def("independence_verdict", [](py::object a, py::object b, py::object c, unsigned digits) {
    FamilyInstance inst = build_instance(FamilyParams(to_integer(a), to_integer(b), to_integer(c)));
    if (!inst.curve) throw DegenerateInput("k = 0");
    std::optional<HeightReport> report;
    {
      py::gil_scoped_release release;
      report = independence_verdict(*inst.curve, inst.points, {digits});
    }
    return parse_json(to_json(*report));
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("digits") = 30);

  m.def("verify_derivation", [](std::optional<std::string> perturb) {
    DerivationReport report = verify_derivation(DerivationOptions{perturb});
    py::list out;
    for (const auto& check : report.checks) {
      out.append(py::make_tuple(check.name, check.passed(), check.residual_terms()));
    }
    return out;
  }, py::arg("perturb") = py::none(), "List of (name, passed, residual term count).");

  m.def("tangent_third_point", [](const std::string& cubic, py::sequence point) {
    if (point.size() != 3) throw InvalidArgument("a projective point has three coordinates");
    std::array<Rational, 3> p{to_rational(point[0]), to_rational(point[1]), to_rational(point[2])};
    ProjectivePoint q = tangent_third_point(PlaneCubic(MultiPoly::parse(cubic)), p);
    return py::make_tuple(from_integer(q[0]), from_integer(q[1]), from_integer(q[2]));
  }, py::arg("cubic"), py::arg("point"),
     "Third intersection of the tangent at point with the cubic in w1, w2, w3.");
}

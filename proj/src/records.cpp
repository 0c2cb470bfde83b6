#include "mordell/records.hpp"

namespace mordell {

using nlohmann::json;

namespace {

constexpr int kErrorDigits = 6;

json value_json(const HeightValue& h, int digits) { return h.value.to_string(digits); }
json error_json(const HeightValue& h) { return h.error_bound.to_string_up(kErrorDigits); }

HeightValue parse_value(const json& value, const json& error, mpfr_prec_t bits) {
  // Bounds are printed rounded up; reading them rounded down makes a
  // parse/print cycle reproduce the same decimal.
  return {Real::parse(value.get<std::string>(), bits),
          Real::parse(error.get<std::string>(), bits, MPFR_RNDD)};
}

}  // namespace

json to_json(const FamilyInstance& instance) {
  json points = json::array();
  for (const auto& p : instance.points) {
    points.push_back({{"x", to_string(p.x())}, {"y", to_string(p.y())}});
  }
  json flags = json::array();
  for (auto f : instance.flags) flags.push_back(to_string(f));
  return {{"a", to_string(instance.params.a())},
          {"b", to_string(instance.params.b())},
          {"c", to_string(instance.params.c())},
          {"k", to_string(instance.k)},
          {"d", to_string(Integer(instance.k * instance.k))},
          {"points", points},
          {"flags", flags}};
}

FamilyInstance instance_from_json(const json& record) {
  FamilyParams params(parse_integer(record.at("a").get<std::string>()),
                      parse_integer(record.at("b").get<std::string>()),
                      parse_integer(record.at("c").get<std::string>()));
  FamilyInstance out{params, parse_integer(record.at("k").get<std::string>()), std::nullopt, {}, {}};
  const auto& points = record.at("points");
  if (points.size() != 3) throw ParseError("instance record must carry exactly three points");
  for (std::size_t i = 0; i < 3; ++i) {
    out.points[i] = CurvePoint(parse_rational(points[i].at("x").get<std::string>()),
                               parse_rational(points[i].at("y").get<std::string>()));
  }
  for (const auto& f : record.at("flags")) out.flags.insert(degeneracy_from_string(f.get<std::string>()));
  if (out.k != 0) out.curve.emplace(out.k * out.k);
  return out;
}

json to_json(const HeightReport& report) {
  const int digits = static_cast<int>(report.digits);
  json heights = json::array(), heights_error = json::array();
  for (const auto& h : report.heights) {
    heights.push_back(value_json(h, digits));
    heights_error.push_back(error_json(h));
  }
  json gram = json::array(), gram_error = json::array();
  for (const auto& row : report.gram) {
    json r = json::array(), e = json::array();
    for (const auto& h : row) {
      r.push_back(value_json(h, digits));
      e.push_back(error_json(h));
    }
    gram.push_back(r);
    gram_error.push_back(e);
  }
  return {{"digits", report.digits},
          {"heights", heights},
          {"heights_error", heights_error},
          {"gram", gram},
          {"gram_error", gram_error},
          {"regulator", value_json(report.regulator, digits)},
          {"regulator_error", error_json(report.regulator)},
          {"independent", report.independent},
          {"verdict", report.verdict}};
}

HeightReport height_report_from_json(const json& record) {
  HeightReport out;
  out.digits = record.at("digits").get<unsigned>();
  const mpfr_prec_t bits = bits_for_digits(out.digits) + 16;
  for (std::size_t i = 0; i < 3; ++i) {
    out.heights[i] = parse_value(record.at("heights")[i], record.at("heights_error")[i], bits);
    for (std::size_t j = 0; j < 3; ++j) {
      out.gram[i][j] = parse_value(record.at("gram")[i][j], record.at("gram_error")[i][j], bits);
    }
  }
  out.regulator = parse_value(record.at("regulator"), record.at("regulator_error"), bits);
  out.independent = record.at("independent").get<bool>();
  out.verdict = record.at("verdict").get<std::string>();
  return out;
}

json to_json(const TorsionGroup& group, const MordellCurve& curve) {
  json gens = json::array();
  for (const auto& g : group.generators) gens.push_back(g.to_string());
  return {{"d", to_string(curve.d())},
          {"structure", to_string(group.structure)},
          {"order", group.order()},
          {"generators", gens}};
}

}  // namespace mordell

#include "mordell/commands.hpp"

#include <fstream>

#include "mordell/derivation.hpp"
#include "mordell/records.hpp"

namespace mordell::cli {

using nlohmann::json;

namespace {

std::string csv_escape(std::string s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

IntRange parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    Integer v = parse_integer(text);
    return {v, v};
  }
  return {parse_integer(text.substr(0, colon)), parse_integer(text.substr(colon + 1))};
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<FamilyInstance> inst;
  try {
    inst = build_instance(FamilyParams(parse_integer(options.a), parse_integer(options.b),
                                       parse_integer(options.c)));
  } catch (const InstanceInvalid& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  json record = to_json(*inst);
  int code = kSuccess;
  std::optional<HeightReport> report;
  if (options.with_heights) {
    if (inst->degenerate()) {
      err << "degenerate instance; heights not computed\n";
      code = kDegenerate;
    } else {
      try {
        report = independence_verdict(*inst->curve, inst->points, options.precision);
        record["heights"] = to_json(*report);
      } catch (const DegenerateInput& e) {
        err << "degenerate input: " << e.what() << '\n';
        code = kDegenerate;
      } catch (const Error& e) {
        err << "height computation failed: " << e.what() << '\n';
        code = kVerificationFailure;
      }
    }
  }

  if (options.format == OutputFormat::Json) {
    out << record.dump(2) << '\n';
    return code;
  }
  out << "a,b,c,k,x1,y1,x2,y2,x3,y3,flags";
  if (report) out << ",regulator,regulator_error,independent";
  out << '\n';
  out << record["a"].get<std::string>() << ',' << record["b"].get<std::string>() << ','
      << record["c"].get<std::string>() << ',' << record["k"].get<std::string>();
  for (const auto& p : inst->points) out << ',' << to_string(p.x()) << ',' << to_string(p.y());
  std::string flags;
  for (auto f : inst->flags) flags += (flags.empty() ? "" : "|") + to_string(f);
  out << ',' << flags;
  if (report) {
    out << ',' << record["heights"]["regulator"].get<std::string>() << ','
        << record["heights"]["regulator_error"].get<std::string>() << ','
        << (report->independent ? "true" : "false");
  }
  out << '\n';
  return code;
}

int cmd_verify_identities(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  DerivationOptions dopts{options.perturb};
  DerivationReport report;
  std::vector<IdentityCheck> extra;
  try {
    if (options.params) {
      const auto& p = *options.params;
      report = verify_derivation(
          FamilyParams(parse_integer(p[0]), parse_integer(p[1]), parse_integer(p[2])), dopts);
    } else {
      report = verify_derivation(dopts);
    }
    for (const auto& text : options.checks) {
      auto eq = text.find('=');
      MultiPoly residual = eq == std::string::npos
                               ? MultiPoly::parse(text)
                               : MultiPoly::parse(text.substr(0, eq)) - MultiPoly::parse(text.substr(eq + 1));
      extra.push_back({"user-check", text, {residual}});
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  bool ok = true;
  auto print = [&](const IdentityCheck& c) {
    ok = ok && c.passed();
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.statement;
    if (options.print_poly) out << " [residual terms: " << c.residual_terms() << ']';
    out << '\n';
  };
  for (const auto& c : report.checks) print(c);
  for (const auto& c : extra) print(c);
  out << (ok ? "all identities hold\n" : "identity verification FAILED\n");
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_scan(const ScanConfig& config, std::ostream& out, std::ostream& err) {
  ScanResult result;
  try {
    result = run_scan(config);
  } catch (const InstanceInvalid& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open '" << *config.out_path << "' for writing\n";
      return kUsage;
    }
    write_scan(result, config.format, config.precision.digits, file);
    if (!file) {
      err << "write to '" << *config.out_path << "' failed\n";
      return kUsage;
    }
  } else {
    write_scan(result, config.format, config.precision.digits, out);
  }
  return kSuccess;
}

int cmd_torsion(const std::string& d, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    MordellCurve curve(parse_integer(d));
    TorsionGroup group = torsion_subgroup(curve);
    if (format == OutputFormat::Json) {
      out << to_json(group, curve).dump(2) << '\n';
    } else {
      std::string gens;
      for (const auto& g : group.generators) gens += (gens.empty() ? "" : " ") + g.to_string();
      out << "d,structure,order,generators\n"
          << to_string(curve.d()) << ',' << to_string(group.structure) << ',' << group.order()
          << ',' << csv_escape(gens) << '\n';
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

int cmd_regulator(const RegulatorOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<MordellCurve> curve;
  std::vector<CurvePoint> points;
  try {
    curve.emplace(parse_integer(options.d));
    for (const auto& text : options.points) {
      points.push_back(CurvePoint::parse(text));
      if (!is_on_curve(*curve, points.back())) {
        throw InvalidArgument("point " + points.back().to_string() + " is not on the curve");
      }
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const int digits = static_cast<int>(options.precision.digits);
  try {
    json heights = json::array(), heights_error = json::array(), pts = json::array();
    for (const auto& p : points) {
      HeightValue h = canonical_height(*curve, p, options.precision);
      pts.push_back(p.to_string());
      heights.push_back(h.value.to_string(digits));
      heights_error.push_back(h.error_bound.to_string_up(6));
    }
    HeightValue reg = regulator(*curve, points, options.precision);
    bool independent = (reg.value - reg.error_bound).sign() > 0;
    if (options.format == OutputFormat::Json) {
      json record{{"d", to_string(curve->d())},
                  {"digits", options.precision.digits},
                  {"points", pts},
                  {"heights", heights},
                  {"heights_error", heights_error},
                  {"regulator", reg.value.to_string(digits)},
                  {"regulator_error", reg.error_bound.to_string_up(6)},
                  {"independent", independent}};
      out << record.dump(2) << '\n';
    } else {
      out << "d,points,regulator,regulator_error,independent\n"
          << to_string(curve->d()) << ',' << points.size() << ',' << reg.value.to_string(digits) << ','
          << reg.error_bound.to_string_up(6) << ',' << (independent ? "true" : "false") << '\n';
    }
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "height computation failed: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace mordell::cli

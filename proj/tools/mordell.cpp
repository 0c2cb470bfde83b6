// mordell: construct and check curves y^2 = x^3 + k^2 carrying three
// independent rational points.

#include <CLI11.hpp>

#include <iostream>

#include "mordell/commands.hpp"

namespace {

using mordell::OutputFormat;

const std::map<std::string, OutputFormat> kFormats{{"json", OutputFormat::Json},
                                                   {"csv", OutputFormat::Csv}};

}  // namespace

int main(int argc, char** argv) {
  namespace cli = mordell::cli;

  CLI::App app{"Mordell curves y^2 = x^3 + k^2 with three rational points"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  unsigned digits = 30;
  OutputFormat format = OutputFormat::Json;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", digits, "Working precision in decimal digits")
        ->check(CLI::Range(1u, 100000u));
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build the instance for parameters (a, b, c)");
  gen_cmd->add_option("a", gen.a)->required();
  gen_cmd->add_option("b", gen.b)->required();
  gen_cmd->add_option("c", gen.c)->required();
  gen_cmd->add_flag("--with-heights", gen.with_heights, "Append heights, regulator and verdict");
  add_common(gen_cmd);

  cli::VerifyOptions verify;
  std::vector<std::string> verify_params;
  std::string perturb;
  auto* verify_cmd =
      app.add_subcommand("verify-identities", "Check the construction as exact polynomial identities");
  verify_cmd->add_flag("--print-poly", verify.print_poly, "Show residual term counts");
  verify_cmd->add_option("--perturb", perturb,
                         "Bump one closed form (k, u1..u3, v1..v3, w) to exercise the checker");
  verify_cmd->add_option("--params", verify_params, "Specialize a b c")->expected(3);
  verify_cmd->add_option("--check", verify.checks, "Extra identity 'lhs = rhs' to expand and test");

  mordell::ScanConfig scan;
  std::string range_all, range_a, range_b, range_c, out_path;
  bool ordered = false, strict = false;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate instances over a parameter grid");
  scan_cmd->add_option("--range", range_all, "lo:hi applied to a, b and c");
  scan_cmd->add_option("--a", range_a, "lo:hi for a");
  scan_cmd->add_option("--b", range_b, "lo:hi for b");
  scan_cmd->add_option("--c", range_c, "lo:hi for c");
  scan_cmd->add_flag("--ordered", ordered, "Only a <= b <= c");
  scan_cmd->add_flag("--strict", strict, "Only a < b < c");
  scan_cmd->add_option("--out", out_path, "Write the table to this file");
  scan_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  add_common(scan_cmd);

  std::string torsion_d;
  auto* torsion_cmd = app.add_subcommand("torsion", "Torsion subgroup of y^2 = x^3 + d");
  torsion_cmd->add_option("d", torsion_d)->required();
  torsion_cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  cli::RegulatorOptions reg;
  auto* reg_cmd = app.add_subcommand("regulator", "Regulator of points on y^2 = x^3 + d");
  reg_cmd->add_option("d", reg.d)->required();
  reg_cmd->add_option("points", reg.points, "Points as '(x, y)' with x, y in n or n/m form")
      ->required();
  add_common(reg_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsage;
  }

  if (*gen_cmd) {
    gen.precision.digits = digits;
    gen.format = format;
    return cli::cmd_gen(gen, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (!perturb.empty()) verify.perturb = perturb;
    if (verify_params.size() == 3) verify.params = {verify_params[0], verify_params[1], verify_params[2]};
    return cli::cmd_verify_identities(verify, std::cout, std::cerr);
  }
  if (*scan_cmd) {
    try {
      mordell::IntRange all{1, 1};
      if (!range_all.empty()) all = cli::parse_range(range_all);
      scan.a = range_a.empty() ? all : cli::parse_range(range_a);
      scan.b = range_b.empty() ? all : cli::parse_range(range_b);
      scan.c = range_c.empty() ? all : cli::parse_range(range_c);
    } catch (const mordell::Error& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return cli::kUsage;
    }
    if (strict) {
      scan.ordering = mordell::Ordering::Increasing;
    } else if (ordered) {
      scan.ordering = mordell::Ordering::NonDecreasing;
    }
    if (!out_path.empty()) scan.out_path = out_path;
    scan.threads = threads;
    scan.precision.digits = digits;
    scan.format = format;
    return cli::cmd_scan(scan, std::cout, std::cerr);
  }
  if (*torsion_cmd) return cli::cmd_torsion(torsion_d, format, std::cout, std::cerr);
  reg.precision.digits = digits;
  reg.format = format;
  return cli::cmd_regulator(reg, std::cout, std::cerr);
}

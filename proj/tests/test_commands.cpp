#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mordell/commands.hpp"
#include "mordell/records.hpp"

namespace mordell::cli {
namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Captured capture(F&& f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

Captured gen(std::string a, std::string b, std::string c, bool heights = false,
        OutputFormat format = OutputFormat::Json) {
  GenOptions opts{a, b, c, heights, {}, format};
  return capture([&](auto& o, auto& e) { return cmd_gen(opts, o, e); });
}

TEST(Gen, GoldenJson) {
  const char* expected = R"({
  "a": "1",
  "b": "2",
  "c": "3",
  "d": "817539062169600",
  "flags": [],
  "k": "28592640",
  "points": [
    {
      "x": "97920",
      "y": "41909760"
    },
    {
      "x": "195840",
      "y": "91261440"
    },
    {
      "x": "293760",
      "y": "161763840"
    }
  ]
}
)";
  Captured r = gen("1", "2", "3");
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, expected);
}

TEST(Gen, GoldenCsv) {
  Captured r = gen("1", "2", "3", false, OutputFormat::Csv);
  EXPECT_EQ(r.out,
            "a,b,c,k,x1,y1,x2,y2,x3,y3,flags\n"
            "1,2,3,28592640,97920,41909760,195840,91261440,293760,161763840,\n");
}

TEST(Gen, WithHeights) {
  Captured r = gen("1", "2", "3", true);
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto record = nlohmann::json::parse(r.out);
  const auto& h = record.at("heights");
  EXPECT_TRUE(h.at("independent").get<bool>());
  EXPECT_EQ(h.at("regulator").get<std::string>().substr(0, 16), "33.9574760167016");
  EXPECT_LT(std::stod(h.at("regulator_error").get<std::string>()), 1e-6);
  EXPECT_EQ(h.at("heights").size(), 3u);
  EXPECT_EQ(h.at("gram").size(), 3u);
}

TEST(Gen, DegenerateAndUsage) {
  Captured coincident = gen("1", "1", "1");
  EXPECT_EQ(coincident.code, kSuccess);
  auto record = nlohmann::json::parse(coincident.out);
  EXPECT_EQ(record.at("flags"), nlohmann::json::array({"CoincidentPoints"}));
  EXPECT_FALSE(record.contains("heights"));

  EXPECT_EQ(gen("1", "1", "1", true).code, kDegenerate);
  EXPECT_EQ(gen("1", "1", "0", true).code, kDegenerate);
  EXPECT_EQ(gen("0", "0", "0").code, kUsage);
  EXPECT_EQ(gen("x", "2", "3").code, kUsage);
}

TEST(Gen, JsonRoundTrip) {
  for (auto [a, b, c] : {std::array<long, 3>{1, 2, 3}, {1, 1, 0}, {-4, 7, 2}, {0, 1, 2}}) {
    FamilyInstance inst = build_instance(FamilyParams(a, b, c));
    nlohmann::json j = to_json(inst);
    FamilyInstance back = instance_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.params, inst.params);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_EQ(back.points, inst.points);
    EXPECT_EQ(back.flags, inst.flags);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Gen, HeightReportRoundTrip) {
  FamilyInstance inst = build_instance(FamilyParams(1, 2, 3));
  HeightReport report = independence_verdict(*inst.curve, inst.points);
  nlohmann::json j = to_json(report);
  HeightReport back = height_report_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.independent, report.independent);
  EXPECT_EQ(back.digits, report.digits);
  EXPECT_EQ(to_json(back), j);
}

TEST(Verify, AllPass) {
  VerifyOptions opts;
  opts.print_poly = true;
  Captured r = capture([&](auto& o, auto& e) { return cmd_verify_identities(opts, o, e); });
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS on-curve-P3"), std::string::npos);
  EXPECT_NE(r.out.find("[residual terms: 0]"), std::string::npos);
  EXPECT_NE(r.out.find("all identities hold"), std::string::npos);
}

TEST(Verify, PerturbationFails) {
  VerifyOptions opts;
  opts.perturb = "v2";
  Captured r = capture([&](auto& o, auto& e) { return cmd_verify_identities(opts, o, e); });
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_NE(r.out.find("FAIL on-curve-P2"), std::string::npos);
  EXPECT_NE(r.out.find("PASS on-curve-P1"), std::string::npos);
}

TEST(Verify, ParamsAndChecks) {
  VerifyOptions opts;
  opts.params = std::array<std::string, 3>{"2", "5", "7"};
  opts.checks = {"(x+1)^2 = x^2 + 2*x + 1", "x - x"};
  Captured r = capture([&](auto& o, auto& e) { return cmd_verify_identities(opts, o, e); });
  EXPECT_EQ(r.code, kSuccess);
  opts.checks = {"(x+1)^2 = x^2 + 1"};
  r = capture([&](auto& o, auto& e) { return cmd_verify_identities(opts, o, e); });
  EXPECT_EQ(r.code, kVerificationFailure);
  opts.perturb = "nope";
  r = capture([&](auto& o, auto& e) { return cmd_verify_identities(opts, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

ScanConfig small_scan() {
  ScanConfig cfg;
  cfg.a = parse_range("1:3");
  cfg.b = parse_range("1:4");
  cfg.c = parse_range("1:4");
  cfg.ordering = Ordering::Increasing;
  cfg.precision = {15};
  return cfg;
}

TEST(Scan, DeterministicAcrossThreadCounts) {
  std::string first;
  for (unsigned threads : {1u, 2u, 4u}) {
    for (auto format : {OutputFormat::Json, OutputFormat::Csv}) {
      ScanConfig cfg = small_scan();
      cfg.threads = threads;
      cfg.format = format;
      Captured a = capture([&](auto& o, auto& e) { return cmd_scan(cfg, o, e); });
      Captured b = capture([&](auto& o, auto& e) { return cmd_scan(cfg, o, e); });
      EXPECT_EQ(a.code, kSuccess);
      EXPECT_EQ(a.out, b.out);
      if (format == OutputFormat::Json) {
        if (first.empty()) first = a.out;
        EXPECT_EQ(a.out, first);
      }
    }
  }
}

TEST(Scan, ContainsGoldenRow) {
  ScanResult result = run_scan(small_scan());
  bool found = false;
  for (const auto& row : result.rows) {
    if (row.instance.params == FamilyParams(1, 2, 3)) {
      found = true;
      ASSERT_TRUE(row.heights.has_value());
      EXPECT_NEAR(row.heights->regulator.value.to_double(), 33.9574760167017, 1e-6);
    }
    EXPECT_TRUE(row.instance.params.a() < row.instance.params.b());
    EXPECT_TRUE(row.instance.params.b() < row.instance.params.c());
  }
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const auto& p = result.rows[i - 1].instance.params;
    const auto& q = result.rows[i].instance.params;
    EXPECT_TRUE(std::tie(p.a(), p.b(), p.c()) < std::tie(q.a(), q.b(), q.c()));
  }
}

TEST(Scan, EqualAAndBAllFlagged) {
  for (long v = -3; v <= 3; ++v) {
    ScanConfig cfg;
    cfg.a = {v, v};
    cfg.b = {v, v};
    cfg.c = parse_range("-3:3");
    cfg.precision = {15};
    ScanResult result = run_scan(cfg);
    EXPECT_TRUE(result.rows.empty());
    for (const auto& row : result.degenerate) {
      EXPECT_TRUE(row.instance.flags.count(Degeneracy::CoincidentPoints) ||
                  row.instance.flags.count(Degeneracy::KZero));
    }
  }
}

TEST(Scan, EmptyRange) {
  ScanConfig cfg;
  cfg.a = parse_range("5:1");
  Captured r = capture([&](auto& o, auto& e) { return cmd_scan(cfg, o, e); });
  EXPECT_EQ(r.code, kSuccess);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("instances").empty());
  EXPECT_TRUE(j.at("degenerate").empty());
  cfg.format = OutputFormat::Csv;
  r = capture([&](auto& o, auto& e) { return cmd_scan(cfg, o, e); });
  EXPECT_EQ(r.out,
            "a,b,c,k,k_digits,x1,x2,x3,regulator,regulator_error,independent,error\n"
            "\n# degenerate\na,b,c,k,flags\n");
}

TEST(Scan, WritesFile) {
  auto path = std::filesystem::temp_directory_path() / "mordell_scan_test.csv";
  ScanConfig cfg = small_scan();
  cfg.format = OutputFormat::Csv;
  cfg.out_path = path.string();
  Captured r = capture([&](auto& o, auto& e) { return cmd_scan(cfg, o, e); });
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "a,b,c,k,k_digits,x1,x2,x3,regulator,regulator_error,independent,error");
  std::filesystem::remove(path);
}

TEST(ParseRange, Forms) {
  IntRange r = parse_range("-2:7");
  EXPECT_EQ(r.lo, -2);
  EXPECT_EQ(r.hi, 7);
  r = parse_range("4");
  EXPECT_EQ(r.lo, 4);
  EXPECT_EQ(r.hi, 4);
  EXPECT_THROW(parse_range("1:x"), ParseError);
}

TEST(Torsion, Command) {
  Captured r = capture([](auto& o, auto& e) {
    return cmd_torsion("817539062169600", OutputFormat::Json, o, e);
  });
  EXPECT_EQ(r.code, kSuccess);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("structure"), "Z/3Z");
  EXPECT_EQ(j.at("order"), 3);
  EXPECT_EQ(j.at("generators"), nlohmann::json::array({"(0, 28592640)"}));
  r = capture([](auto& o, auto& e) { return cmd_torsion("1", OutputFormat::Csv, o, e); });
  EXPECT_EQ(r.out, "d,structure,order,generators\n1,Z/6Z,6,\"(2, 3)\"\n");
  r = capture([](auto& o, auto& e) { return cmd_torsion("0", OutputFormat::Json, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

TEST(Regulator, Command) {
  RegulatorOptions opts{"817539062169600",
                        {"(97920, 41909760)", "(195840, 91261440)", "293760,161763840"},
                        {20},
                        OutputFormat::Json};
  Captured r = capture([&](auto& o, auto& e) { return cmd_regulator(opts, o, e); });
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("independent").get<bool>());
  EXPECT_NEAR(std::stod(j.at("regulator").get<std::string>()), 33.9574760167017, 1e-6);

  opts.points = {"(97920, 41909760)", "(0, 28592640)"};
  r = capture([&](auto& o, auto& e) { return cmd_regulator(opts, o, e); });
  EXPECT_EQ(r.code, kDegenerate);
  opts.points = {"(1, 1)"};
  r = capture([&](auto& o, auto& e) { return cmd_regulator(opts, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

}  // namespace
}  // namespace mordell::cli

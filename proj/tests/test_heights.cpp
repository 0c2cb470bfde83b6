#include <gtest/gtest.h>

#include <cmath>

#include "mordell/family.hpp"
#include "mordell/heights.hpp"

namespace mordell {
namespace {

const Integer kGoldenK("28592640");

class GoldenHeights : public ::testing::Test {
 protected:
  MordellCurve curve{kGoldenK * kGoldenK};
  CurvePoint p1{97920, 41909760};
  CurvePoint p2{195840, 91261440};
  CurvePoint p3{293760, 161763840};
  CurvePoint torsion{Rational(0), Rational(kGoldenK)};

  double h(const CurvePoint& p) { return canonical_height(curve, p).value.to_double(); }
};

TEST(NaiveHeight, Examples) {
  EXPECT_NEAR(naive_height(CurvePoint(97920, 41909760)).to_double(), std::log(97920.0), 1e-12);
  EXPECT_NEAR(naive_height(CurvePoint(97920, 41909760)).to_double(), 11.491906, 1e-6);
  EXPECT_EQ(naive_height(CurvePoint(1, 3)).to_double(), 0.0);
  EXPECT_NEAR(naive_height(CurvePoint(Rational(3, 4), Rational(5, 8))).to_double(), std::log(4.0),
              1e-15);
  EXPECT_THROW(naive_height(CurvePoint::infinity()), InfinityPoint);
}

TEST_F(GoldenHeights, TorsionIsExactlyZero) {
  for (const auto& t : {torsion, -torsion, CurvePoint::infinity()}) {
    HeightValue v = canonical_height(curve, t);
    EXPECT_TRUE(v.value.is_zero());
    EXPECT_TRUE(v.error_bound.is_zero());
  }
}

TEST_F(GoldenHeights, ErrorBoundMeetsTarget) {
  for (unsigned digits : {10u, 30u, 60u}) {
    HeightValue v = canonical_height(curve, p1, {digits});
    EXPECT_LT(v.error_bound.to_double(), std::pow(10.0, -static_cast<double>(digits)));
    EXPECT_GT(v.value.to_double(), 0.0);
  }
  HeightValue lo = canonical_height(curve, p1, {10});
  HeightValue hi = canonical_height(curve, p1, {60});
  EXPECT_LE(abs(lo.value - hi.value), lo.error_bound + hi.error_bound);
}

TEST_F(GoldenHeights, Homogeneity) {
  for (const auto& p : {p1, p2, p3}) {
    HeightValue base = canonical_height(curve, p);
    for (long n : {2L, 3L, 5L}) {
      HeightValue multiple = canonical_height(curve, scalar_mul(curve, n, p));
      Real residual = abs(multiple.value - Real(n * n, 128) * base.value);
      Real budget = multiple.error_bound + Real(n * n, 128) * base.error_bound;
      EXPECT_LE(residual, budget) << "n = " << n;
      EXPECT_LT(residual.to_double(), 1e-8);
    }
  }
}

TEST_F(GoldenHeights, ParallelogramLaw) {
  const std::vector<CurvePoint> pts{p1, p2, p3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto& p = pts[i];
      const auto& q = pts[j];
      HeightValue s = canonical_height(curve, add(curve, p, q));
      HeightValue d = canonical_height(curve, subtract(curve, p, q));
      HeightValue hp = canonical_height(curve, p), hq = canonical_height(curve, q);
      Real two(2, 128);
      Real residual = abs(s.value + d.value - two * hp.value - two * hq.value);
      Real budget = s.error_bound + d.error_bound + two * (hp.error_bound + hq.error_bound);
      EXPECT_LE(residual, budget);
      EXPECT_LT(residual.to_double(), 1e-8);
    }
  }
}

TEST_F(GoldenHeights, TorsionTranslationInvariance) {
  for (const auto& p : {p1, p2, p3}) {
    HeightValue a = canonical_height(curve, p);
    HeightValue b = canonical_height(curve, add(curve, p, torsion));
    EXPECT_LE(abs(a.value - b.value), a.error_bound + b.error_bound);
  }
}

TEST_F(GoldenHeights, PairingProperties) {
  HeightValue self = height_pairing(curve, p1, p1);
  HeightValue h1 = canonical_height(curve, p1);
  EXPECT_LE(abs(self.value - h1.value), self.error_bound + h1.error_bound);

  HeightValue pt = height_pairing(curve, p1, torsion);
  EXPECT_LE(abs(pt.value), pt.error_bound);

  HeightValue ab = height_pairing(curve, p1, p2);
  HeightValue ba = height_pairing(curve, p2, p1);
  EXPECT_EQ(ab.value, ba.value);
  EXPECT_EQ(ab.error_bound, ba.error_bound);
}

// Low-precision oracle: 4^-n h(x(2^n P)) converges to the canonical height
// with error O(4^-n).
TEST_F(GoldenHeights, DoublingLimitOracle) {
  for (const auto& p : {p1, p2, p3}) {
    CurvePoint q = p;
    double scale = 1.0;
    double last = 0.0;
    for (int n = 0; n <= 7; ++n) {
      last = naive_height(q, 256).to_double() * scale;
      q = add(curve, q, q);
      scale /= 4.0;
    }
    EXPECT_NEAR(last, h(p), 1e-3);
  }
}

TEST_F(GoldenHeights, GoldenRegulator) {
  std::vector<CurvePoint> pts{p1, p2, p3};
  HeightValue r = regulator(curve, pts);
  EXPECT_NEAR(r.value.to_double(), 33.9574760167017, 1e-6);
  EXPECT_LT(r.error_bound.to_double(), 1e-6);
  // Agreement with the published value to all 15 shown digits.
  EXPECT_LT(std::fabs(r.value.to_double() - 33.9574760167017), 1e-13);
}

TEST_F(GoldenHeights, RepeatedPointGivesZeroRegulator) {
  std::vector<CurvePoint> pts{p1, p1, p2};
  HeightValue r = regulator(curve, pts);
  EXPECT_LE(abs(r.value), r.error_bound);
}

TEST_F(GoldenHeights, UnimodularInvariance) {
  std::vector<CurvePoint> base{p1, p2};
  std::vector<CurvePoint> moved{p1, add(curve, scalar_mul(curve, 2, p1), p2)};
  HeightValue a = regulator(curve, base);
  HeightValue b = regulator(curve, moved);
  EXPECT_LE(abs(a.value - b.value), a.error_bound + b.error_bound);
  EXPECT_GT(a.value.to_double(), 0.0);
}

TEST_F(GoldenHeights, RegulatorRejectsTorsion) {
  std::vector<CurvePoint> pts{p1, torsion};
  EXPECT_THROW(regulator(curve, pts), DegenerateInput);
}

TEST_F(GoldenHeights, VerdictIndependent) {
  HeightReport report = independence_verdict(curve, {p1, p2, p3});
  EXPECT_TRUE(report.independent);
  EXPECT_EQ(report.verdict, "rank >= 3 witnessed");
  EXPECT_GT(report.regulator.value - report.regulator.error_bound, Real(0L, 128));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(report.gram[i][j].value, report.gram[j][i].value);
    }
    EXPECT_EQ(report.gram[i][i].value, report.heights[i].value);
  }
}

TEST_F(GoldenHeights, GramPositiveSemidefinite) {
  HeightReport report = independence_verdict(curve, {p1, p2, p3});
  // Sylvester: leading principal minors of a positive definite matrix are positive.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::vector<HeightValue>> minor(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) minor[i].push_back(report.gram[i][j]);
    }
    HeightValue det = detail::determinant(minor);
    EXPECT_GT(det.value, det.error_bound) << "minor " << n;
  }
}

TEST_F(GoldenHeights, VerdictDependent) {
  HeightReport report = independence_verdict(curve, {p1, p2, add(curve, p1, p2)});
  EXPECT_FALSE(report.independent);
  EXPECT_LE(abs(report.regulator.value), report.regulator.error_bound);
  EXPECT_EQ(report.verdict, "independence not established");
}

TEST_F(GoldenHeights, VerdictTorsionInvariant) {
  HeightReport a = independence_verdict(curve, {p1, p2, p3});
  HeightReport b = independence_verdict(curve, {add(curve, p1, torsion), p2, p3});
  EXPECT_EQ(a.independent, b.independent);
  EXPECT_LE(abs(a.regulator.value - b.regulator.value),
            a.regulator.error_bound + b.regulator.error_bound);
}

TEST_F(GoldenHeights, VerdictRejectsDegenerate) {
  EXPECT_THROW(independence_verdict(curve, {p1, -p1, p2}), DegenerateInput);
  EXPECT_THROW(independence_verdict(curve, {p1, torsion, p2}), DegenerateInput);
  auto inst = build_instance(FamilyParams(1, 1, 1));
  EXPECT_THROW(independence_verdict(*inst.curve, inst.points), DegenerateInput);
}

// Curves where the cube root of d sits close to an integer, so the real locus
// starts just above the shifted origin.
TEST(Heights, FamilyCurvesNearCubeEdge) {
  for (auto [a, b, c] : {std::array<long, 3>{1, 2, 6}, {2, 3, 6}}) {
    FamilyInstance inst = build_instance(FamilyParams(a, b, c));
    const MordellCurve& curve = *inst.curve;
    for (const auto& p : inst.points) {
      HeightValue h = canonical_height(curve, p);
      HeightValue h2 = canonical_height(curve, add(curve, p, p));
      EXPECT_LE(abs(h2.value - Real(4L, 128) * h.value),
                h2.error_bound + Real(4L, 128) * h.error_bound);
      CurvePoint q = p;
      double scale = 1.0, last = 0.0;
      for (int n = 0; n <= 7; ++n) {
        last = naive_height(q, 256).to_double() * scale;
        q = add(curve, q, q);
        scale /= 4.0;
      }
      EXPECT_NEAR(last, h.value.to_double(), 1e-3);
    }
    EXPECT_TRUE(independence_verdict(curve, inst.points).independent);
  }
}

TEST(HeightsDetail, Determinant) {
  auto hv = [](long v) { return HeightValue{Real(v, 128), Real(0L, 128)}; };
  HeightValue det = detail::determinant({{hv(2), hv(1)}, {hv(1), hv(3)}});
  EXPECT_EQ(det.value.to_double(), 5.0);
  HeightValue det3 = detail::determinant({{hv(1), hv(2), hv(3)}, {hv(4), hv(5), hv(6)},
                                          {hv(7), hv(8), hv(10)}});
  EXPECT_EQ(det3.value.to_double(), -3.0);
}

TEST(HeightsDetail, NonsingularReduction) {
  // (2, 3) on d = 1: gcd(3x^2, 2y) = gcd(12, 6) = 6, singular mod 2 and 3.
  EXPECT_FALSE(detail::has_nonsingular_reduction(CurvePoint(2, 3)));
  // (3, 5) on d = -2: gcd(27, 10) = 1.
  EXPECT_TRUE(detail::has_nonsingular_reduction(CurvePoint(3, 5)));
}

TEST(Heights, OtherCurves) {
  // y^2 = x^3 - 2 with (3, 5) and y^2 = x^3 + 17 with (-2, 3), (2, 5).
  MordellCurve m2(-2);
  HeightValue a = canonical_height(m2, CurvePoint(3, 5));
  HeightValue a2 = canonical_height(m2, scalar_mul(m2, 2, CurvePoint(3, 5)));
  EXPECT_LE(abs(a2.value - Real(4L, 128) * a.value), a2.error_bound + Real(4L, 128) * a.error_bound);
  MordellCurve e17(17);
  std::vector<CurvePoint> pts{CurvePoint(-2, 3), CurvePoint(2, 5)};
  HeightValue r = regulator(e17, pts);
  EXPECT_GT(r.value, r.error_bound);
}

}  // namespace
}  // namespace mordell

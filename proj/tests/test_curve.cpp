#include <gtest/gtest.h>

#include <random>

#include "mordell/curve.hpp"

namespace mordell {
namespace {

const Integer kGoldenK("28592640");

MordellCurve golden_curve() { return MordellCurve(kGoldenK * kGoldenK); }

TEST(MordellCurve, RejectsZero) { EXPECT_THROW(MordellCurve(0), InvalidArgument); }

TEST(MordellCurve, Discriminant) { EXPECT_EQ(MordellCurve(5).discriminant(), -432 * 25); }

TEST(CurvePoint, ParseAndPrint) {
  EXPECT_TRUE(CurvePoint::parse("O").is_infinity());
  CurvePoint p = CurvePoint::parse("(6/4, -9/3)");
  EXPECT_EQ(p.x(), Rational(3, 2));
  EXPECT_EQ(p.y(), -3);
  EXPECT_EQ(p.to_string(), "(3/2, -3)");
  EXPECT_EQ(CurvePoint::parse(p.to_string()), p);
  EXPECT_EQ(CurvePoint::parse("97920,41909760"), CurvePoint(97920, 41909760));
  EXPECT_THROW(CurvePoint::parse("(1, 2, 3)"), ParseError);
  EXPECT_THROW(CurvePoint::parse("(1/0, 2)"), ParseError);
  EXPECT_EQ(CurvePoint::infinity().to_string(), "O");
}

TEST(IsOnCurve, Examples) {
  EXPECT_TRUE(is_on_curve(golden_curve(), CurvePoint(97920, 41909760)));
  EXPECT_TRUE(is_on_curve(golden_curve(), CurvePoint(Rational(0), Rational(kGoldenK))));
  // (-8)^2 = 64 = (-8)^3 + 24^2
  EXPECT_TRUE(is_on_curve(MordellCurve(576), CurvePoint(-8, -8)));
  EXPECT_TRUE(is_on_curve(MordellCurve(576), CurvePoint::infinity()));
  EXPECT_FALSE(is_on_curve(MordellCurve(576), CurvePoint(-8, -7)));
}

TEST(GroupLaw, Examples) {
  MordellCurve e(1);
  // slope 12/6 = 2, x3 = 4 - 4 = 0, y3 = 2(2 - 0) - 3 = 1
  EXPECT_EQ(add(e, CurvePoint(2, 3), CurvePoint(2, 3)), CurvePoint(0, 1));
  EXPECT_EQ(add(e, CurvePoint(2, 3), CurvePoint::infinity()), CurvePoint(2, 3));
  MordellCurve g = golden_curve();
  CurvePoint t(Rational(0), Rational(kGoldenK));
  EXPECT_TRUE(add(g, t, -t).is_infinity());
  EXPECT_TRUE(add(e, CurvePoint(-1, 0), CurvePoint(-1, 0)).is_infinity());
}

TEST(ScalarMul, Examples) {
  MordellCurve g = golden_curve();
  CurvePoint t(Rational(0), Rational(kGoldenK));
  EXPECT_TRUE(scalar_mul(g, 3, t).is_infinity());
  EXPECT_EQ(scalar_mul(g, 2, t), CurvePoint(Rational(0), Rational(-kGoldenK)));
  CurvePoint p(97920, 41909760);
  EXPECT_EQ(scalar_mul(g, 1, p), p);
  EXPECT_TRUE(scalar_mul(g, 0, p).is_infinity());
  EXPECT_EQ(scalar_mul(g, -3, p), -scalar_mul(g, 3, p));
  EXPECT_EQ(scalar_mul(g, 5, p), add(g, scalar_mul(g, 2, p), scalar_mul(g, 3, p)));
}

TEST(OrderOfPoint, Examples) {
  MordellCurve g = golden_curve();
  EXPECT_EQ(order_of_point(g, CurvePoint(Rational(0), Rational(kGoldenK))), 3u);
  EXPECT_EQ(order_of_point(MordellCurve(1), CurvePoint(-1, 0)), 2u);
  EXPECT_EQ(order_of_point(MordellCurve(1), CurvePoint(2, 3)), 6u);
  EXPECT_EQ(order_of_point(g, CurvePoint(97920, 41909760)), std::nullopt);
  EXPECT_EQ(order_of_point(g, CurvePoint(195840, 91261440)), std::nullopt);
  EXPECT_EQ(order_of_point(g, CurvePoint(293760, 161763840)), std::nullopt);
  EXPECT_EQ(order_of_point(MordellCurve(-432), CurvePoint(12, 36)), 3u);
}

TEST(Torsion, GoldenCurveIsZ3) {
  TorsionGroup t = torsion_subgroup(golden_curve());
  EXPECT_EQ(t.structure, TorsionStructure::Z3);
  ASSERT_EQ(t.generators.size(), 1u);
  EXPECT_EQ(t.generators[0], CurvePoint(Rational(0), Rational(kGoldenK)));
}

TEST(Torsion, SmallCases) {
  EXPECT_EQ(torsion_subgroup(MordellCurve(1)).structure, TorsionStructure::Z6);
  EXPECT_EQ(torsion_subgroup(MordellCurve(2)).structure, TorsionStructure::Trivial);
  EXPECT_EQ(torsion_subgroup(MordellCurve(8)).structure, TorsionStructure::Z2);
  EXPECT_EQ(torsion_subgroup(MordellCurve(-432)).structure, TorsionStructure::Z3);
  EXPECT_EQ(torsion_subgroup(MordellCurve(64)).structure, TorsionStructure::Z6);  // 2^6 * 1
  // 2^6 * (-432): scaled generator (12*4, 36*8)
  TorsionGroup t = torsion_subgroup(MordellCurve(-432 * 64));
  EXPECT_EQ(t.structure, TorsionStructure::Z3);
  EXPECT_EQ(t.generators[0], CurvePoint(48, 288));
}

// Nagell-Lutz oracle: torsion points are integral with y = 0 or y^2 | 432 d^2.
// Enumerate them directly and count the points of finite order.
unsigned nagell_lutz_torsion_order(long d) {
  MordellCurve curve(d);
  const long disc = 432 * d * d;
  unsigned order = 1;
  for (long y = 0; y * y <= disc; ++y) {
    if (y != 0 && disc % (y * y) != 0) continue;
    Integer cube = Integer(y) * y - d;
    auto x = exact_root(cube, 3);
    if (!x) continue;
    for (long sign : {1L, -1L}) {
      if (y == 0 && sign < 0) continue;
      CurvePoint p(Rational(*x), Rational(sign * y));
      CurvePoint q = p;
      for (int n = 1; n <= 12; ++n) {
        if (q.is_infinity()) {
          ++order;
          break;
        }
        q = add(curve, q, p);
      }
    }
  }
  return order;
}

TEST(Torsion, AgreesWithNagellLutzSearch) {
  for (long d = -200; d <= 200; ++d) {
    if (d == 0) continue;
    MordellCurve curve(d);
    TorsionGroup t = torsion_subgroup(curve);
    EXPECT_EQ(t.order(), nagell_lutz_torsion_order(d)) << "d = " << d;
    for (const auto& g : t.generators) {
      EXPECT_TRUE(is_on_curve(curve, g)) << "d = " << d;
      EXPECT_EQ(order_of_point(curve, g), t.order()) << "d = " << d;
    }
  }
}

// Random points: integer combinations of generators on a curve of rank >= 3.
class GroupProperties : public ::testing::Test {
 protected:
  MordellCurve curve = golden_curve();
  std::vector<CurvePoint> gens{CurvePoint(97920, 41909760), CurvePoint(195840, 91261440),
                               CurvePoint(293760, 161763840),
                               CurvePoint(Rational(0), Rational(kGoldenK))};
  std::mt19937 rng{314159};

  CurvePoint random_point() {
    std::uniform_int_distribution<int> coeff(-2, 2);
    CurvePoint p;
    for (const auto& g : gens) p = add(curve, p, scalar_mul(curve, coeff(rng), g));
    return p;
  }
};

TEST_F(GroupProperties, Axioms) {
  for (int iter = 0; iter < 25; ++iter) {
    CurvePoint p = random_point(), q = random_point(), r = random_point();
    ASSERT_TRUE(is_on_curve(curve, p));
    EXPECT_EQ(add(curve, add(curve, p, q), r), add(curve, p, add(curve, q, r)));
    EXPECT_EQ(add(curve, p, q), add(curve, q, p));
    EXPECT_EQ(add(curve, p, CurvePoint::infinity()), p);
    EXPECT_TRUE(add(curve, p, -p).is_infinity());
    EXPECT_TRUE(is_on_curve(curve, add(curve, p, q)));
    EXPECT_TRUE(is_on_curve(curve, scalar_mul(curve, 3, p)));
  }
}

TEST(GroupPropertiesOrder, OrderIsMinimal) {
  for (long d : {1L, -1L, 8L, -27L, -432L, 64L, 576L, 729L}) {
    MordellCurve curve(d);
    for (const auto& g : torsion_subgroup(curve).generators) {
      for (long m = 1; m <= 6; ++m) {
        CurvePoint p = scalar_mul(curve, m, g);
        if (p.is_infinity()) continue;
        auto n = order_of_point(curve, p);
        ASSERT_TRUE(n.has_value());
        EXPECT_TRUE(scalar_mul(curve, *n, p).is_infinity());
        for (unsigned k = 1; k < *n; ++k) EXPECT_FALSE(scalar_mul(curve, k, p).is_infinity());
      }
    }
  }
}

TEST(SixthPowers, ReductionRoundTrip) {
  MordellCurve g = golden_curve();
  auto [reduced, scale] = detail::reduce_sixth_powers(g);
  EXPECT_EQ(scale, 8);  // 28592640 = 2^9 * 3^2 * 5 * 17 * 73
  EXPECT_EQ(reduced.d(), Integer(55845) * 55845);
  CurvePoint p(97920, 41909760);
  CurvePoint q = detail::to_reduced(p, scale);
  EXPECT_TRUE(is_on_curve(reduced, q));
  EXPECT_EQ(detail::from_reduced(q, scale), p);
}

TEST(Factorize, Basics) {
  auto f = factorize(Integer("28592640"));
  EXPECT_EQ(f[Integer(2)], 9u);
  EXPECT_EQ(f[Integer(3)], 2u);
  EXPECT_EQ(f[Integer(73)], 1u);
  // Two primes above the trial-division bound force the rho path.
  Integer p("1000000007"), q("998244353");
  auto g = factorize(p * q * 1024);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g[p], 1u);
  EXPECT_EQ(g[q], 1u);
  EXPECT_EQ(g[Integer(2)], 10u);
}

}  // namespace
}  // namespace mordell

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mordell/curve.hpp"
#include "mordell/real.hpp"

namespace mordell {

class InfinityPoint : public Error {
 public:
  using Error::Error;
};

class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Working precision in significant decimal digits. Heights are certified to
/// an absolute error of 10^-digits.
struct Precision {
  unsigned digits = 30;
};

/// A real number together with a bound on its absolute error.
struct HeightValue {
  Real value;
  Real error_bound;
};

/// log max(|num x|, |den x|).
Real naive_height(const CurvePoint& p, mpfr_prec_t bits = 128);

/// Canonical height normalized as lim 4^-n h(x(2^n P)), where h is the naive
/// height above. Torsion points and the point at infinity get exactly 0.
///
/// The curve is first reduced by sixth powers, then P is replaced by the
/// smallest multiple mP whose reduction is nonsingular at every prime; for
/// such a point the non-archimedean contributions collapse to
/// log den(x)/2 plus discriminant terms that cancel against the archimedean
/// normalization. The archimedean part uses Tate's series in t = 1/x after
/// shifting x so the real locus stays at x >= 1.
HeightValue canonical_height(const MordellCurve& curve, const CurvePoint& p,
                             Precision precision = {});

/// <P, Q> = (h(P + Q) - h(P) - h(Q)) / 2.
HeightValue height_pairing(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q,
                           Precision precision = {});

/// Determinant of the height-pairing Gram matrix. Points must be of infinite
/// order; repeated points are allowed.
HeightValue regulator(const MordellCurve& curve, std::span<const CurvePoint> points,
                      Precision precision = {});

struct HeightReport {
  std::array<HeightValue, 3> heights;
  std::array<std::array<HeightValue, 3>, 3> gram;
  HeightValue regulator;
  bool independent = false;
  std::string verdict;
  unsigned digits = 0;
};

/// Heights, Gram matrix and regulator of three points, with the verdict
/// independent iff regulator - error > 0. Throws DegenerateInput when two
/// points agree up to sign or a point has finite order.
HeightReport independence_verdict(const MordellCurve& curve, const std::array<CurvePoint, 3>& points,
                                  Precision precision = {});

namespace detail {

/// Interval determinant (midpoint, radius) by cofactor expansion.
HeightValue determinant(const std::vector<std::vector<HeightValue>>& matrix);

/// True iff the point reduces to a nonsingular point modulo every prime on
/// y^2 = x^3 + d.
bool has_nonsingular_reduction(const CurvePoint& p);

}  // namespace detail

}  // namespace mordell

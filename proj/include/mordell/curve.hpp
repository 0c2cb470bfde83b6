#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

/// The Mordell curve y^2 = x^3 + d over Q, d a nonzero integer.
class MordellCurve {
 public:
  explicit MordellCurve(Integer d);

  const Integer& d() const { return d_; }

  /// -432 d^2.
  Integer discriminant() const;

  friend bool operator==(const MordellCurve&, const MordellCurve&) = default;

 private:
  Integer d_;
};

/// A rational point in affine coordinates, or the point at infinity.
/// Coordinates are always in lowest terms.
class CurvePoint {
 public:
  /// The point at infinity.
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y);

  static CurvePoint infinity() { return {}; }

  /// Parses `O`, `(x, y)` or `x,y` where each coordinate is `n` or `n/m`.
  static CurvePoint parse(std::string_view text);

  bool is_infinity() const { return !affine_; }
  const Rational& x() const;
  const Rational& y() const;

  /// Both coordinates have denominator 1.
  bool is_integral() const;

  CurvePoint operator-() const;

  /// `O` or `(x, y)`.
  std::string to_string() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  struct Affine {
    Rational x;
    Rational y;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

bool is_on_curve(const MordellCurve& curve, const CurvePoint& p);

/// Chord-tangent addition.
CurvePoint add(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint subtract(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q);

/// n*P by double-and-add; negative n gives -(|n|P).
CurvePoint scalar_mul(const MordellCurve& curve, long n, const CurvePoint& p);

/// Order of a rational point, or std::nullopt for infinite order. Rational
/// torsion has order at most 12 (Mazur), and every multiple of a torsion
/// point on an integral model has integer coordinates (Nagell-Lutz), so the
/// search stops at the first non-integral multiple.
std::optional<unsigned> order_of_point(const MordellCurve& curve, const CurvePoint& p);

enum class TorsionStructure { Trivial, Z2, Z3, Z6 };

std::string to_string(TorsionStructure t);

struct TorsionGroup {
  TorsionStructure structure = TorsionStructure::Trivial;
  /// Empty for the trivial group, one generator otherwise.
  std::vector<CurvePoint> generators;

  unsigned order() const;
};

/// Torsion subgroup of E(Q) from the classification of Mordell curves,
/// applied to d with sixth powers removed.
TorsionGroup torsion_subgroup(const MordellCurve& curve);

namespace detail {

/// The isomorphic curve y^2 = x^3 + d/e^6 and the map (x, y) -> (x/e^2, y/e^3).
struct ReducedModel {
  MordellCurve curve;
  Integer scale;
};
ReducedModel reduce_sixth_powers(const MordellCurve& curve);
CurvePoint to_reduced(const CurvePoint& p, const Integer& scale);
CurvePoint from_reduced(const CurvePoint& p, const Integer& scale);

}  // namespace detail

}  // namespace mordell

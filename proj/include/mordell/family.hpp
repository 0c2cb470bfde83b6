#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "mordell/arith.hpp"
#include "mordell/curve.hpp"
#include "mordell/poly.hpp"

namespace mordell {

/// Parameters (a, b, c) of the family; not all zero.
class FamilyParams {
 public:
  FamilyParams(Integer a, Integer b, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  std::map<std::string, Rational> assignment() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  Integer a_, b_, c_;
};

/// k = -8 (a^3+b^3-c^3)(b^3+c^3-a^3)(c^3+a^3-b^3)
///        * (a^6 - 2a^3b^3 - 2a^3c^3 + b^6 - 2b^3c^3 + c^6).
Integer compute_k(const FamilyParams& params);

/// The three points (u_i, v_i) on y^2 = x^3 + k^2, in the order (a, b, c),
/// with the signs of v_i exactly as the closed forms give them.
std::array<CurvePoint, 3> compute_points_raw(const FamilyParams& params);

/// As compute_points_raw, but each point is reported as the representative
/// of {P, -P} with y >= 0. This is the form used for instances and output.
std::array<CurvePoint, 3> compute_points(const FamilyParams& params);

enum class Degeneracy { KZero, CoincidentPoints, TorsionHit };

std::string to_string(Degeneracy flag);
Degeneracy degeneracy_from_string(const std::string& name);

class InstanceInvalid : public Error {
 public:
  using Error::Error;
};

struct FamilyInstance {
  FamilyParams params;
  Integer k;
  /// Absent exactly when k = 0.
  std::optional<MordellCurve> curve;
  std::array<CurvePoint, 3> points;
  std::set<Degeneracy> flags;

  bool degenerate() const { return !flags.empty(); }
};

/// Builds and checks an instance. Never rejects degenerate parameters; it
/// flags them. Throws InstanceInvalid if a point misses the curve.
FamilyInstance build_instance(const FamilyParams& params);

/// The family's closed forms as polynomials in the symbols a, b, c.
namespace symbolic {

/// Polynomials over caller-chosen a, b, c (symbols or constants).
struct Inputs {
  MultiPoly a = MultiPoly::variable("a");
  MultiPoly b = MultiPoly::variable("b");
  MultiPoly c = MultiPoly::variable("c");
};

/// (a^3+b^3-c^3)(b^3+c^3-a^3)(c^3+a^3-b^3).
MultiPoly cube_factor_product(const Inputs& in = {});
/// a^6 - 2a^3b^3 - 2a^3c^3 + b^6 - 2b^3c^3 + c^6.
MultiPoly sextic_factor(const Inputs& in = {});
MultiPoly k(const Inputs& in = {});
/// u_i and v_i, i in {1, 2, 3}.
MultiPoly u(int i, const Inputs& in = {});
MultiPoly v(int i, const Inputs& in = {});

/// The intermediate solution in terms of the free scale r:
/// v_i = (...) r and k = (a^6 - ...) r.
MultiPoly v_scaled(int i, const Inputs& in = {});
MultiPoly k_scaled(const Inputs& in = {});

/// The w-triple produced by the tangent at (a^3, b^3, c^3):
/// (a^3(b^3+c^3-a^3), b^3(c^3+a^3-b^3), c^3(a^3+b^3-c^3)).
std::array<MultiPoly, 3> tangent_w(const Inputs& in = {});

}  // namespace symbolic

/// A projective plane cubic F(w1, w2, w3) = 0. Coefficients may involve
/// other symbols; F must be homogeneous of degree 3 in the coordinates.
class PlaneCubic {
 public:
  static inline const std::array<std::string, 3> kDefaultCoordinates{"w1", "w2", "w3"};

  explicit PlaneCubic(MultiPoly f, std::array<std::string, 3> coordinates = kDefaultCoordinates);

  const MultiPoly& polynomial() const { return f_; }
  const std::array<std::string, 3>& coordinates() const { return coords_; }

  MultiPoly at(const std::array<MultiPoly, 3>& point) const;
  Rational at(const std::array<Rational, 3>& point) const;

 private:
  MultiPoly f_;
  std::array<std::string, 3> coords_;
};

/// (b^3 w1 - a^3 w2)(c^3 w1^2 - a^3 w3^2) - (c^3 w1 - a^3 w3)(b^3 w1^2 - a^3 w2^2).
PlaneCubic cubic_condition(const FamilyParams& params);
PlaneCubic cubic_condition(const symbolic::Inputs& in = {});

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class TangentContained : public Error {
 public:
  using Error::Error;
};

using ProjectivePoint = std::array<Integer, 3>;

/// Coprime integers, first nonzero coordinate positive.
ProjectivePoint normalize_projective(const std::array<Rational, 3>& point);
bool projectively_equal(const ProjectivePoint& lhs, const ProjectivePoint& rhs);

/// Third intersection of the tangent at `point` with the cubic.
///
/// The tangent line is {X : grad F(P) . X = 0}. It is parametrized as
/// s P + t D with D = grad F(P) x P, and the binary cubic F(sP + tD) has a
/// double root at t = 0; its remaining factor alpha s + beta t gives the
/// third point -beta P + alpha D.
ProjectivePoint tangent_third_point(const PlaneCubic& cubic, const std::array<Rational, 3>& point);

/// The same construction over polynomial coordinates, unnormalized. Works
/// when the coefficients and the point are symbolic.
std::array<MultiPoly, 3> tangent_third_point(const PlaneCubic& cubic,
                                             const std::array<MultiPoly, 3>& point);

struct RationalFunction {
  MultiPoly numerator;
  MultiPoly denominator;

  /// std::nullopt when the denominator vanishes at the assignment.
  std::optional<Rational> evaluate(const std::map<std::string, Rational>& assignment) const;
};

/// The nonzero roots t of b^3((w1 t + k)^2 - k^2) = a^3((w2 t + k)^2 - k^2)
/// and c^3((w1 t + k)^2 - k^2) = a^3((w3 t + k)^2 - k^2):
///   t1 = 2k(a^3 w2 - b^3 w1) / (b^3 w1^2 - a^3 w2^2),
///   t2 = 2k(a^3 w3 - c^3 w1) / (c^3 w1^2 - a^3 w3^2).
struct TPair {
  RationalFunction t1;
  RationalFunction t2;
};

TPair solve_t_pair(const symbolic::Inputs& in, const std::array<MultiPoly, 3>& w,
                   const MultiPoly& k = MultiPoly::variable("k"));
TPair solve_t_pair(const FamilyParams& params, const std::array<MultiPoly, 3>& w,
                   const MultiPoly& k = MultiPoly::variable("k"));

/// Symbols w1, w2, w3.
std::array<MultiPoly, 3> w_symbols();

}  // namespace mordell

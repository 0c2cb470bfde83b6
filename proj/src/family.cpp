#include "mordell/family.hpp"

#include <numeric>

namespace mordell {

namespace {

Integer cube(const Integer& x) { return x * x * x; }

MultiPoly cube(const MultiPoly& x) { return x.pow(3); }

struct CubeFactors {
  Integer a3, b3, c3, product;
};

CubeFactors cube_factors(const FamilyParams& p) {
  CubeFactors f{cube(p.a()), cube(p.b()), cube(p.c()), 0};
  f.product = (f.a3 + f.b3 - f.c3) * (f.b3 + f.c3 - f.a3) * (f.c3 + f.a3 - f.b3);
  return f;
}

symbolic::Inputs constant_inputs(const FamilyParams& p) {
  return {MultiPoly(p.a()), MultiPoly(p.b()), MultiPoly(p.c())};
}

const MultiPoly& pick(int i, const MultiPoly& x, const MultiPoly& y, const MultiPoly& z) {
  switch (i) {
    case 1:
      return x;
    case 2:
      return y;
    case 3:
      return z;
    default:
      throw InvalidArgument("point index must be 1, 2 or 3");
  }
}

}  // namespace

FamilyParams::FamilyParams(Integer a, Integer b, Integer c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0 && c_ == 0) throw InvalidArgument("(a, b, c) must not be (0, 0, 0)");
}

std::map<std::string, Rational> FamilyParams::assignment() const {
  return {{"a", Rational(a_)}, {"b", Rational(b_)}, {"c", Rational(c_)}};
}

Integer compute_k(const FamilyParams& params) {
  auto f = cube_factors(params);
  const Integer &A = f.a3, &B = f.b3, &C = f.c3;
  Integer sextic = A * A - 2 * A * B - 2 * A * C + B * B - 2 * B * C + C * C;
  return -8 * f.product * sextic;
}

std::array<CurvePoint, 3> compute_points_raw(const FamilyParams& params) {
  auto f = cube_factors(params);
  const Integer &A = f.a3, &B = f.b3, &C = f.c3;
  Integer s = 8 * f.product;
  Integer u1 = -s * params.a();
  Integer u2 = -s * params.b();
  Integer u3 = -s * params.c();
  Integer v1 = s * (3 * A * A - 2 * A * B - 2 * A * C - B * B + 2 * B * C - C * C);
  Integer v2 = -s * (A * A + 2 * A * B - 2 * A * C - 3 * B * B + 2 * B * C + C * C);
  Integer v3 = -s * (A * A - 2 * A * B + 2 * A * C + B * B + 2 * B * C - 3 * C * C);
  return {CurvePoint(Rational(u1), Rational(v1)), CurvePoint(Rational(u2), Rational(v2)),
          CurvePoint(Rational(u3), Rational(v3))};
}

std::array<CurvePoint, 3> compute_points(const FamilyParams& params) {
  auto points = compute_points_raw(params);
  for (auto& p : points) {
    if (p.y() < 0) p = -p;
  }
  return points;
}

std::string to_string(Degeneracy flag) {
  switch (flag) {
    case Degeneracy::KZero:
      return "KZero";
    case Degeneracy::CoincidentPoints:
      return "CoincidentPoints";
    case Degeneracy::TorsionHit:
      return "TorsionHit";
  }
  return "unknown";
}

Degeneracy degeneracy_from_string(const std::string& name) {
  if (name == "KZero") return Degeneracy::KZero;
  if (name == "CoincidentPoints") return Degeneracy::CoincidentPoints;
  if (name == "TorsionHit") return Degeneracy::TorsionHit;
  throw ParseError("unknown degeneracy flag '" + name + "'");
}

FamilyInstance build_instance(const FamilyParams& params) {
  FamilyInstance inst{params, compute_k(params), std::nullopt, compute_points(params), {}};
  Rational d(inst.k * inst.k);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = inst.points[i];
    if (p.y() * p.y() != p.x() * p.x() * p.x() + d) {
      throw InstanceInvalid("point P" + std::to_string(i + 1) + " = " + p.to_string() +
                            " is not on y^2 = x^3 + " + to_string(inst.k) + "^2");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (inst.points[i] == inst.points[j] || inst.points[i] == -inst.points[j]) {
        inst.flags.insert(Degeneracy::CoincidentPoints);
      }
    }
  }
  if (inst.k == 0) {
    inst.flags.insert(Degeneracy::KZero);
    return inst;
  }
  inst.curve.emplace(inst.k * inst.k);
  for (const auto& p : inst.points) {
    if (order_of_point(*inst.curve, p)) inst.flags.insert(Degeneracy::TorsionHit);
  }
  return inst;
}

namespace symbolic {

MultiPoly cube_factor_product(const Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  return (A + B - C) * (B + C - A) * (C + A - B);
}

MultiPoly sextic_factor(const Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  return A * A - 2 * A * B - 2 * A * C + B * B - 2 * B * C + C * C;
}

MultiPoly k(const Inputs& in) { return -8 * cube_factor_product(in) * sextic_factor(in); }

MultiPoly u(int i, const Inputs& in) {
  return -8 * pick(i, in.a, in.b, in.c) * cube_factor_product(in);
}

MultiPoly v(int i, const Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  MultiPoly f = cube_factor_product(in);
  switch (i) {
    case 1:
      return 8 * f * (3 * A * A - 2 * A * B - 2 * A * C - B * B + 2 * B * C - C * C);
    case 2:
      return -8 * f * (A * A + 2 * A * B - 2 * A * C - 3 * B * B + 2 * B * C + C * C);
    case 3:
      return -8 * f * (A * A - 2 * A * B + 2 * A * C + B * B + 2 * B * C - 3 * C * C);
    default:
      throw InvalidArgument("point index must be 1, 2 or 3");
  }
}

MultiPoly v_scaled(int i, const Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  MultiPoly r = MultiPoly::variable("r");
  switch (i) {
    case 1:
      return -(3 * A * A - 2 * A * B - 2 * A * C - B * B + 2 * B * C - C * C) * r;
    case 2:
      return (A * A + 2 * A * B - 2 * A * C - 3 * B * B + 2 * B * C + C * C) * r;
    case 3:
      return (A * A - 2 * A * B + 2 * A * C + B * B + 2 * B * C - 3 * C * C) * r;
    default:
      throw InvalidArgument("point index must be 1, 2 or 3");
  }
}

MultiPoly k_scaled(const Inputs& in) { return sextic_factor(in) * MultiPoly::variable("r"); }

std::array<MultiPoly, 3> tangent_w(const Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  return {A * (B + C - A), B * (C + A - B), C * (A + B - C)};
}

}  // namespace symbolic

PlaneCubic::PlaneCubic(MultiPoly f, std::array<std::string, 3> coordinates)
    : f_(std::move(f)), coords_(std::move(coordinates)) {
  if (!f_.is_homogeneous({coords_.begin(), coords_.end()}, 3)) {
    throw InvalidArgument("PlaneCubic: polynomial is not homogeneous of degree 3 in (" +
                          coords_[0] + ", " + coords_[1] + ", " + coords_[2] + ")");
  }
}

MultiPoly PlaneCubic::at(const std::array<MultiPoly, 3>& point) const {
  return f_.substitute({{coords_[0], point[0]}, {coords_[1], point[1]}, {coords_[2], point[2]}});
}

Rational PlaneCubic::at(const std::array<Rational, 3>& point) const {
  return f_.evaluate({{coords_[0], point[0]}, {coords_[1], point[1]}, {coords_[2], point[2]}});
}

PlaneCubic cubic_condition(const symbolic::Inputs& in) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  auto [w1, w2, w3] = w_symbols();
  MultiPoly lhs = (B * w1 - A * w2) * (C * w1 * w1 - A * w3 * w3);
  MultiPoly rhs = (C * w1 - A * w3) * (B * w1 * w1 - A * w2 * w2);
  return PlaneCubic(lhs - rhs);
}

PlaneCubic cubic_condition(const FamilyParams& params) {
  return cubic_condition(constant_inputs(params));
}

ProjectivePoint normalize_projective(const std::array<Rational, 3>& point) {
  Integer lcm_den = 1;
  for (const auto& q : point) lcm_den = lcm(lcm_den, Integer(q.get_den()));
  ProjectivePoint out;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = point[i] * Rational(lcm_den);
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g == 0) throw InvalidArgument("(0, 0, 0) is not a projective point");
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

bool projectively_equal(const ProjectivePoint& lhs, const ProjectivePoint& rhs) {
  return lhs[0] * rhs[1] == lhs[1] * rhs[0] && lhs[0] * rhs[2] == lhs[2] * rhs[0] &&
         lhs[1] * rhs[2] == lhs[2] * rhs[1];
}

std::array<MultiPoly, 3> tangent_third_point(const PlaneCubic& cubic,
                                             const std::array<MultiPoly, 3>& point) {
  if (!cubic.at(point).is_zero()) {
    throw InvalidArgument("tangent_third_point: the point is not on the cubic");
  }
  const auto& coords = cubic.coordinates();
  std::map<std::string, MultiPoly> at_point{
      {coords[0], point[0]}, {coords[1], point[1]}, {coords[2], point[2]}};
  std::array<MultiPoly, 3> grad;
  for (std::size_t i = 0; i < 3; ++i) {
    grad[i] = cubic.polynomial().derivative(coords[i]).substitute(at_point);
  }
  if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero()) {
    throw SingularPoint("tangent_third_point: the cubic is singular at the point");
  }
  // Direction along the tangent line, independent of the point itself.
  std::array<MultiPoly, 3> dir{grad[1] * point[2] - grad[2] * point[1],
                               grad[2] * point[0] - grad[0] * point[2],
                               grad[0] * point[1] - grad[1] * point[0]};

  const std::string t = "__tangent_t";
  MultiPoly tv = MultiPoly::variable(t);
  MultiPoly restricted = cubic.at({point[0] + tv * dir[0], point[1] + tv * dir[1],
                                   point[2] + tv * dir[2]});
  MultiPoly alpha = restricted.coefficient(t, 2);
  MultiPoly beta = restricted.coefficient(t, 3);
  if (alpha.is_zero() && beta.is_zero()) {
    throw TangentContained("tangent_third_point: the tangent line lies in the cubic");
  }
  return {alpha * dir[0] - beta * point[0], alpha * dir[1] - beta * point[1],
          alpha * dir[2] - beta * point[2]};
}

ProjectivePoint tangent_third_point(const PlaneCubic& cubic, const std::array<Rational, 3>& point) {
  ProjectivePoint p = normalize_projective(point);
  for (const auto& v : cubic.polynomial().variables()) {
    if (v != cubic.coordinates()[0] && v != cubic.coordinates()[1] &&
        v != cubic.coordinates()[2]) {
      throw InvalidArgument("tangent_third_point: cubic has symbolic coefficient '" + v + "'");
    }
  }
  auto q = tangent_third_point(cubic, {MultiPoly(p[0]), MultiPoly(p[1]), MultiPoly(p[2])});
  std::array<Rational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = q[i].evaluate({});
  return normalize_projective(out);
}

std::optional<Rational> RationalFunction::evaluate(
    const std::map<std::string, Rational>& assignment) const {
  Rational den = denominator.evaluate(assignment);
  if (den == 0) return std::nullopt;
  return numerator.evaluate(assignment) / den;
}

std::array<MultiPoly, 3> w_symbols() {
  return {MultiPoly::variable("w1"), MultiPoly::variable("w2"), MultiPoly::variable("w3")};
}

TPair solve_t_pair(const symbolic::Inputs& in, const std::array<MultiPoly, 3>& w,
                   const MultiPoly& k) {
  MultiPoly A = cube(in.a), B = cube(in.b), C = cube(in.c);
  return {{2 * k * (A * w[1] - B * w[0]), B * w[0] * w[0] - A * w[1] * w[1]},
          {2 * k * (A * w[2] - C * w[0]), C * w[0] * w[0] - A * w[2] * w[2]}};
}

TPair solve_t_pair(const FamilyParams& params, const std::array<MultiPoly, 3>& w,
                   const MultiPoly& k) {
  return solve_t_pair(constant_inputs(params), w, k);
}

}  // namespace mordell

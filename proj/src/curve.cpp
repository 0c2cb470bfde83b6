#include "mordell/curve.hpp"

#include <cctype>

namespace mordell {

namespace {

Rational square(const Rational& q) { return q * q; }

Integer ipow(const Integer& base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

MordellCurve::MordellCurve(Integer d) : d_(std::move(d)) {
  if (d_ == 0) throw InvalidArgument("MordellCurve: d must be nonzero (y^2 = x^3 is singular)");
}

Integer MordellCurve::discriminant() const { return Integer(-432) * d_ * d_; }

CurvePoint::CurvePoint(Rational x, Rational y) {
  x.canonicalize();
  y.canonicalize();
  affine_ = Affine{std::move(x), std::move(y)};
}

CurvePoint CurvePoint::parse(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text == "O" || text == "o" || text == "inf") return infinity();
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("point must look like '(x, y)' or 'O': '" + std::string(text) + "'");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

const Rational& CurvePoint::x() const {
  if (!affine_) throw InvalidArgument("point at infinity has no x-coordinate");
  return affine_->x;
}

const Rational& CurvePoint::y() const {
  if (!affine_) throw InvalidArgument("point at infinity has no y-coordinate");
  return affine_->y;
}

bool CurvePoint::is_integral() const {
  return !affine_ || (affine_->x.get_den() == 1 && affine_->y.get_den() == 1);
}

CurvePoint CurvePoint::operator-() const {
  if (!affine_) return *this;
  return {affine_->x, -affine_->y};
}

std::string CurvePoint::to_string() const {
  if (!affine_) return "O";
  return "(" + mordell::to_string(affine_->x) + ", " + mordell::to_string(affine_->y) + ")";
}

bool is_on_curve(const MordellCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  return square(p.y()) == p.x() * p.x() * p.x() + Rational(curve.d());
}

CurvePoint add(const MordellCurve& /*curve*/, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y() == 0) return CurvePoint::infinity();
    slope = 3 * p.x() * p.x() / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return {std::move(x3), std::move(y3)};
}

CurvePoint subtract(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q) {
  return add(curve, p, -q);
}

CurvePoint scalar_mul(const MordellCurve& curve, long n, const CurvePoint& p) {
  if (n < 0) return -scalar_mul(curve, -n, p);
  CurvePoint result;
  CurvePoint base = p;
  auto k = static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1ul) result = add(curve, result, base);
    k >>= 1;
    if (k > 0) base = add(curve, base, base);
  }
  return result;
}

std::optional<unsigned> order_of_point(const MordellCurve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return 1u;
  CurvePoint multiple = p;
  for (unsigned n = 1; n <= 12; ++n) {
    if (multiple.is_infinity()) return n;
    if (!multiple.is_integral()) return std::nullopt;
    multiple = add(curve, multiple, p);
  }
  return std::nullopt;
}

std::string to_string(TorsionStructure t) {
  switch (t) {
    case TorsionStructure::Trivial:
      return "trivial";
    case TorsionStructure::Z2:
      return "Z/2Z";
    case TorsionStructure::Z3:
      return "Z/3Z";
    case TorsionStructure::Z6:
      return "Z/6Z";
  }
  return "unknown";
}

unsigned TorsionGroup::order() const {
  switch (structure) {
    case TorsionStructure::Trivial:
      return 1;
    case TorsionStructure::Z2:
      return 2;
    case TorsionStructure::Z3:
      return 3;
    case TorsionStructure::Z6:
      return 6;
  }
  return 1;
}

TorsionGroup torsion_subgroup(const MordellCurve& curve) {
  auto [reduced, scale] = detail::reduce_sixth_powers(curve);
  const Integer& d = reduced.d();
  auto lift = [&](CurvePoint p) { return detail::from_reduced(p, scale); };

  if (d == 1) return {TorsionStructure::Z6, {lift({2, 3})}};
  if (auto root = exact_root(d, 2)) return {TorsionStructure::Z3, {lift({0, *root})}};
  if (d == -432) return {TorsionStructure::Z3, {lift({12, 36})}};
  if (auto root = exact_root(d, 3)) return {TorsionStructure::Z2, {lift({-*root, 0})}};
  return {TorsionStructure::Trivial, {}};
}

namespace detail {

ReducedModel reduce_sixth_powers(const MordellCurve& curve) {
  auto split = split_sixth_power(curve.d());
  return {MordellCurve(split.reduced), split.scale};
}

CurvePoint to_reduced(const CurvePoint& p, const Integer& scale) {
  if (p.is_infinity() || scale == 1) return p;
  return {p.x() / Rational(ipow(scale, 2)), p.y() / Rational(ipow(scale, 3))};
}

CurvePoint from_reduced(const CurvePoint& p, const Integer& scale) {
  if (p.is_infinity() || scale == 1) return p;
  return {p.x() * Rational(ipow(scale, 2)), p.y() * Rational(ipow(scale, 3))};
}

}  // namespace detail

}  // namespace mordell

#include "mordell/heights.hpp"

#include <cmath>
#include <future>

namespace mordell {

namespace {

// Multiples needed to reach everywhere-nonsingular reduction are bounded by
// the exponents of the component groups (at most 12 after sixth-power
// reduction, times 2 or 3 when the model is still non-minimal at 2 or 3).
constexpr unsigned kMaxMultiple = 72;

Real zero(mpfr_prec_t bits) { return Real(bits); }

// Shifted model y^2 = (X - r)^3 + d with b-invariants, r chosen so the real
// locus satisfies X > 1 (d > 0) or X >= floor(|d|^(1/3)) >= 1 (d < 0).
struct ShiftedModel {
  Integer r;
  Integer b2, b4, b6, b8;
  Rational t_max;
};

ShiftedModel shifted_model(const Integer& d) {
  ShiftedModel m;
  Integer root;
  Integer ad = abs(d);
  mpz_root(root.get_mpz_t(), ad.get_mpz_t(), 3);
  if (d > 0) {
    // Real points have X >= r - d^(1/3) > 1; t_max is 1/X at a rational
    // point just below that edge.
    m.r = root + 2;
    mpfr_t cbrt;
    mpfr_init2(cbrt, 96);
    mpfr_set_z(cbrt, d.get_mpz_t(), MPFR_RNDU);
    mpfr_cbrt(cbrt, cbrt, MPFR_RNDU);
    Rational upper;
    mpfr_get_q(upper.get_mpq_t(), cbrt);
    mpfr_clear(cbrt);
    Rational edge = Rational(m.r) - upper - Rational(Integer(1), Integer(1) << 64);
    m.t_max = 1 / edge;
  } else {
    m.r = 0;
    m.t_max = Rational(Integer(1), root);
  }
  const Integer& r = m.r;
  Integer a6 = d - r * r * r;
  m.b2 = -12 * r;
  m.b4 = 6 * r * r;
  m.b6 = 4 * a6;
  m.b8 = -12 * r * a6 - 9 * r * r * r * r;
  return m;
}

// Upper bound on |log z(t)| for t in [0, t_max], where
// z(t) = 1 - b4 t^2 - 2 b6 t^3 - b8 t^4 is positive on that range. The
// coefficients are large and cancel, so each subinterval uses the centered
// form z(mid) + z'([lo, hi]) [-w/2, w/2], with z' enclosed monomial by monomial
// (each monomial is monotone for t >= 0).
double log_z_bound(const ShiftedModel& m) {
  const mpfr_prec_t bits = 128;
  const Real one(1, bits), two(2, bits);
  const std::array<Real, 3> coeffs{-Real(m.b4, bits), Real(Integer(-2 * m.b6), bits),
                                   -Real(m.b8, bits)};
  const std::array<unsigned, 3> powers{2, 3, 4};
  const Real t_max(m.t_max, bits);
  // Covers rounding in every product and sum below, relative to the largest
  // term magnitude.
  const Real slack = Real::pow2(-100, bits);

  auto power = [&](const Real& t, unsigned n) {
    Real out = one;
    for (unsigned k = 0; k < n; ++k) out *= t;
    return out;
  };

  double worst = 0.0;
  auto enclose = [&](const Real& lo, const Real& hi, auto& self, int depth) -> void {
    const Real mid = (lo + hi) / two;
    const Real half = (hi - lo) / two;
    Real zmid = one, scale = one;
    Real dlo(0L, bits), dhi(0L, bits);
    for (std::size_t i = 0; i < 3; ++i) {
      Real term = coeffs[i] * power(mid, powers[i]);
      zmid += term;
      scale += abs(term);
      Real p(static_cast<long>(powers[i]), bits);
      Real a = p * coeffs[i] * power(lo, powers[i] - 1);
      Real b = p * coeffs[i] * power(hi, powers[i] - 1);
      dlo += a < b ? a : b;
      dhi += a < b ? b : a;
      scale += (abs(a) + abs(b)) * half;
    }
    const Real spread = max(abs(dlo), abs(dhi)) * half;
    const Real pad = scale * slack;
    Real zlo = zmid - spread - pad;
    Real zhi = zmid + spread + pad;
    if (zlo.sign() <= 0) {
      if (depth > 60) {
        throw PrecisionUnreachable("cannot certify positivity of the Tate series factor");
      }
      self(lo, mid, self, depth + 1);
      self(mid, hi, self, depth + 1);
      return;
    }
    worst = std::max({worst, std::abs(log(zlo).to_double()), std::abs(log(zhi).to_double())});
  };
  const int pieces = 512;
  for (int i = 0; i < pieces; ++i) {
    Real lo = t_max * Real(i, bits) / Real(pieces, bits);
    Real hi = t_max * Real(i + 1, bits) / Real(pieces, bits);
    enclose(lo, hi, enclose, 0);
  }
  return worst;
}

// Height of a point with everywhere-nonsingular reduction on the integral
// model y^2 = x^3 + d.
HeightValue height_of_good_point(const Integer& d, const CurvePoint& q, Precision precision) {
  const ShiftedModel m = shifted_model(d);
  const Integer num = q.x().get_num() + m.r * q.x().get_den();
  const Integer& den = q.x().get_den();

  const double lead_estimate = std::log(std::abs(num.get_d()) + 1.0) + 1.0;
  const double magnitude = std::isfinite(lead_estimate)
                               ? lead_estimate
                               : static_cast<double>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const mpfr_prec_t bits = bits_for_digits(precision.digits) + 24 +
                           static_cast<mpfr_prec_t>(std::ceil(std::log2(magnitude + 1.0)));

  const double bound = log_z_bound(m);
  // Tail after N terms: sum_{n >= N} 4^-n * bound / 4 = bound * 4^-N / 3.
  const double target_log2 = -static_cast<double>(precision.digits) * std::log2(10.0) - 3.0;
  long n_terms = static_cast<long>(std::ceil((std::log2(bound / 3.0 + 1e-300) - target_log2) / 2.0));
  n_terms = std::max(n_terms, 4L);

  const Real b2(m.b2, bits), b4(m.b4, bits), b6(m.b6, bits), b8(m.b8, bits);
  const Real one(1, bits), two(2, bits), four(4, bits);
  Real t = Real(den, bits) / Real(num, bits);
  Real sum(bits);
  Real weight(1, bits);
  for (long n = 0; n < n_terms; ++n) {
    Real t2 = t * t;
    Real t3 = t2 * t;
    Real t4 = t3 * t;
    Real w = four * t + b2 * t2 + two * b4 * t3 + b6 * t4;
    Real z = one - b4 * t2 - two * b6 * t3 - b8 * t4;
    if (z.sign() <= 0) throw PrecisionUnreachable("Tate series factor left the real locus");
    sum += weight * log(z);
    weight /= four;
    t = w / z;
  }
  Real value = log_abs(num, bits) + sum / four;

  Real tail = Real::pow2(-2 * n_terms, bits) * Real::from_double(bound / 3.0 * 1.0001, bits);
  Real rounding = Real::from_double((n_terms + 8) * (magnitude + bound + 1.0), bits) *
                  Real::pow2(-(bits - 8), bits);
  return {std::move(value), tail + rounding};
}

void require_on_curve(const MordellCurve& curve, const CurvePoint& p) {
  if (!is_on_curve(curve, p)) {
    throw InvalidArgument("point " + p.to_string() + " is not on y^2 = x^3 + " + to_string(curve.d()));
  }
}

struct GramData {
  std::vector<HeightValue> heights;
  std::vector<std::vector<HeightValue>> gram;
};

GramData gram_matrix(const MordellCurve& curve, std::span<const CurvePoint> points,
                     Precision precision) {
  const std::size_t n = points.size();
  std::vector<std::future<HeightValue>> single, pair_sum;
  for (const auto& p : points) {
    single.push_back(std::async(std::launch::async,
                                [&curve, p, precision] { return canonical_height(curve, p, precision); }));
  }
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      index.emplace_back(i, j);
      CurvePoint s = add(curve, points[i], points[j]);
      pair_sum.push_back(std::async(std::launch::async, [&curve, s, precision] {
        return canonical_height(curve, s, precision);
      }));
    }
  }
  GramData out;
  for (auto& f : single) out.heights.push_back(f.get());
  out.gram.assign(n, std::vector<HeightValue>(n, HeightValue{Real(), Real()}));
  for (std::size_t i = 0; i < n; ++i) out.gram[i][i] = out.heights[i];
  for (std::size_t k = 0; k < index.size(); ++k) {
    auto [i, j] = index[k];
    HeightValue s = pair_sum[k].get();
    const auto& hi = out.heights[i];
    const auto& hj = out.heights[j];
    Real two(2, s.value.precision());
    HeightValue v{(s.value - hi.value - hj.value) / two,
                  (s.error_bound + hi.error_bound + hj.error_bound) / two};
    out.gram[i][j] = v;
    out.gram[j][i] = v;
  }
  return out;
}

void require_infinite_order(const MordellCurve& curve, std::span<const CurvePoint> points) {
  for (const auto& p : points) {
    require_on_curve(curve, p);
    if (p.is_infinity()) throw DegenerateInput("the point at infinity cannot enter a regulator");
    if (order_of_point(curve, p)) {
      throw DegenerateInput("torsion point " + p.to_string() + " cannot enter a regulator");
    }
  }
}

}  // namespace

Real naive_height(const CurvePoint& p, mpfr_prec_t bits) {
  if (p.is_infinity()) throw InfinityPoint("naive height of the point at infinity");
  Integer num = abs(p.x().get_num());
  const Integer& den = p.x().get_den();
  return log_abs(num > den ? num : den, bits);
}

HeightValue canonical_height(const MordellCurve& curve, const CurvePoint& p, Precision precision) {
  if (precision.digits == 0) throw InvalidArgument("precision must be positive");
  require_on_curve(curve, p);
  const mpfr_prec_t bits = bits_for_digits(precision.digits);
  if (p.is_infinity() || order_of_point(curve, p)) return {zero(bits), zero(bits)};

  auto [reduced, scale] = detail::reduce_sixth_powers(curve);
  const CurvePoint base = detail::to_reduced(p, scale);
  CurvePoint q = base;
  unsigned m = 1;
  while (!detail::has_nonsingular_reduction(q)) {
    if (++m > kMaxMultiple) {
      throw PrecisionUnreachable("no small multiple of " + p.to_string() +
                                 " has everywhere nonsingular reduction");
    }
    q = add(reduced, q, base);
  }
  HeightValue h = height_of_good_point(reduced.d(), q, precision);
  Real m2(static_cast<long>(m * m), h.value.precision());
  h.value /= m2;
  h.error_bound /= m2;
  Real target = Real::parse("1e-" + std::to_string(precision.digits), h.value.precision());
  if (h.error_bound > target) {
    throw PrecisionUnreachable("certified error " + h.error_bound.to_string(6) +
                               " exceeds the requested 1e-" + std::to_string(precision.digits));
  }
  return h;
}

HeightValue height_pairing(const MordellCurve& curve, const CurvePoint& p, const CurvePoint& q,
                           Precision precision) {
  HeightValue hp = canonical_height(curve, p, precision);
  HeightValue hq = canonical_height(curve, q, precision);
  HeightValue hs = canonical_height(curve, add(curve, p, q), precision);
  Real two(2, hs.value.precision());
  return {(hs.value - hp.value - hq.value) / two,
          (hs.error_bound + hp.error_bound + hq.error_bound) / two};
}

HeightValue regulator(const MordellCurve& curve, std::span<const CurvePoint> points,
                      Precision precision) {
  require_infinite_order(curve, points);
  return detail::determinant(gram_matrix(curve, points, precision).gram);
}

HeightReport independence_verdict(const MordellCurve& curve, const std::array<CurvePoint, 3>& points,
                                  Precision precision) {
  require_infinite_order(curve, points);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (points[i] == points[j] || points[i] == -points[j]) {
        throw DegenerateInput("points P" + std::to_string(i + 1) + " and P" +
                              std::to_string(j + 1) + " coincide up to sign");
      }
    }
  }
  GramData data = gram_matrix(curve, points, precision);
  HeightReport report;
  report.regulator = detail::determinant(data.gram);
  report.digits = precision.digits;
  for (std::size_t i = 0; i < 3; ++i) {
    report.heights[i] = data.heights[i];
    for (std::size_t j = 0; j < 3; ++j) report.gram[i][j] = data.gram[i][j];
  }
  report.independent = (report.regulator.value - report.regulator.error_bound).sign() > 0;
  report.verdict = report.independent ? "rank >= 3 witnessed" : "independence not established";
  return report;
}

namespace detail {

HeightValue determinant(const std::vector<std::vector<HeightValue>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return {Real(1, 64), Real(64)};
  mpfr_prec_t bits = matrix[0][0].value.precision();
  if (n == 1) return matrix[0][0];
  const Real ulp = Real::pow2(-(bits - 4), bits);
  HeightValue acc{Real(bits), Real(bits)};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<HeightValue>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<HeightValue> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(matrix[i][j]);
      }
      minor.push_back(std::move(row));
    }
    HeightValue sub = determinant(minor);
    const HeightValue& a = matrix[0][col];
    Real prod = a.value * sub.value;
    Real rad = abs(a.value) * sub.error_bound + abs(sub.value) * a.error_bound +
               a.error_bound * sub.error_bound + abs(prod) * ulp;
    if (col % 2 == 0) {
      acc.value += prod;
    } else {
      acc.value -= prod;
    }
    acc.error_bound += rad + abs(acc.value) * ulp;
  }
  return acc;
}

bool has_nonsingular_reduction(const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const Integer& x = p.x().get_num();
  const Integer& den = p.x().get_den();
  const Integer& y = p.y().get_num();
  // Singular modulo p iff p divides both partials 3x^2 and 2y at a
  // p-integral point; primes in the denominator reduce to infinity.
  Integer g = gcd(Integer(3 * x * x), Integer(2 * y));
  for (Integer common = gcd(g, den); common > 1; common = gcd(g, den)) {
    while (mpz_divisible_p(g.get_mpz_t(), common.get_mpz_t())) g /= common;
  }
  return g == 1;
}

}  // namespace detail

}  // namespace mordell

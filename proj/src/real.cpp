#include "mordell/real.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace mordell {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::~Real() {
  mpfr_clear(value_);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real Real::parse(std::string_view decimal, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real out(bits);
  std::string s(decimal);
  if (mpfr_set_str(out.value_, s.c_str(), 10, rnd) != 0) {
    throw ParseError("not a real number: '" + s + "'");
  }
  return out;
}

Real Real::pow2(long exponent, mpfr_prec_t bits) {
  Real out(1, bits);
  mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

Real Real::from_double(double value, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDU);
  return out;
}

void Real::grow_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

namespace {

std::string format(const char* spec, int digits, mpfr_srcptr value) {
  if (mpfr_nan_p(value)) return "nan";
  if (mpfr_inf_p(value)) return mpfr_sgn(value) > 0 ? "inf" : "-inf";
  int n = mpfr_snprintf(nullptr, 0, spec, digits, value);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), spec, digits, value);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace

std::string Real::to_string(int digits) const { return format("%.*Rg", digits, value_); }

std::string Real::to_string_up(int digits) const { return format("%.*RUg", digits, value_); }

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real log_abs(const Integer& n, mpfr_prec_t bits) {
  if (n == 0) throw InvalidArgument("log_abs: zero argument");
  // Enough working bits that the rounding of n itself is negligible.
  Real x(Integer(abs(n)), bits + 16);
  Real out = log(x);
  mpfr_prec_round(out.get(), bits, MPFR_RNDN);
  return out;
}

mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

}  // namespace mordell

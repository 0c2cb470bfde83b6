#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mordell/arith.hpp"

namespace mordell {

/// Owning MPFR value. Binary operations round to nearest at the larger of
/// the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long value, mpfr_prec_t bits);
  Real(const Integer& value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  ~Real();

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;

  static Real parse(std::string_view decimal, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pow2(long exponent, mpfr_prec_t bits);
  static Real from_double(double value, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// `digits` significant digits in mpfr's %Rg notation.
  std::string to_string(int digits) const;
  /// As to_string, rounding toward +inf; used for printing error bounds.
  std::string to_string_up(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  void grow_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real max(const Real& a, const Real& b);

/// Natural log of |n| for a nonzero integer, accurate to `bits`.
Real log_abs(const Integer& n, mpfr_prec_t bits);

/// Bits needed to carry `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(unsigned digits);

}  // namespace mordell

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mordell {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

Integer parse_integer(std::string_view text);

/// Accepts `n`, `-n` and `n/m`; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// `n` when the denominator is 1, `n/m` otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Rational make_rational(const Integer& num, const Integer& den);

/// Prime factorization of |n| (n != 0) by trial division, then
/// Miller-Rabin and Pollard-Brent rho on the cofactor.
std::map<Integer, unsigned> factorize(const Integer& n);

/// Largest e > 0 with e^6 | d, and d / e^6.
struct SixthPowerSplit {
  Integer reduced;
  Integer scale;
};
SixthPowerSplit split_sixth_power(const Integer& d);

/// Integer k-th root of n when n is a perfect k-th power.
std::optional<Integer> exact_root(const Integer& n, unsigned k);

}  // namespace mordell

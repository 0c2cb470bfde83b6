#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

class MissingVariable : public Error {
 public:
  using Error::Error;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// The variable list is kept sorted and duplicate-free; every exponent vector
/// has one entry per variable. Terms are ordered graded-lexicographically
/// (highest total degree first) and zero coefficients are never stored, so
/// two polynomials over the same variables are equal iff their term maps are.
/// Binary operations promote both operands to the union of their variables.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexGreater {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
  };
  using TermMap = std::map<Exponents, Integer, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const Integer& coefficient,
                            const std::map<std::string, unsigned>& powers);

  /// Accepts `+ - * ^`, parentheses, integer literals and identifiers,
  /// e.g. `-8*a^3*b^2 + (c - 1)^6`.
  static MultiPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(const std::string& var) const;

  /// True iff every term has total degree `degree` in `over` (the zero
  /// polynomial is homogeneous of every degree).
  bool is_homogeneous(const std::vector<std::string>& over, unsigned degree) const;

  /// Same polynomial over a superset of its variables.
  MultiPoly over(const std::vector<std::string>& vars) const;

  /// Coefficient of `var^power`, as a polynomial in the remaining variables.
  MultiPoly coefficient(const std::string& var, unsigned power) const;

  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Replaces each listed variable by the given polynomial.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& replacements) const;

  MultiPoly derivative(const std::string& var) const;

  MultiPoly pow(unsigned exponent) const;

  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& lhs,
                                         const std::vector<std::string>& rhs);

}  // namespace mordell

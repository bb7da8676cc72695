#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ratvec/rational.hpp"
#include "ratvec/tables.hpp"

namespace ratvec {

/// Graded-lexicographic order on exponent vectors (u, v, w, r, s): higher
/// total degree first, ties broken lexicographically.  Used as the canonical
/// term order for printing, leading terms, and division.
struct GrlexLess {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

/// Sparse multivariate polynomial over the rationals in u, v, w, r, s.
/// Invariant: no zero coefficients stored.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  MultiPoly(std::initializer_list<std::pair<Exponents, Rational>> terms);

  static MultiPoly from_terms(const TermList& terms);
  static MultiPoly variable(int index);  // 0..4 -> u, v, w, r, s
  static MultiPoly constant(const Rational& c) { return MultiPoly(c); }

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int var) const;
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rational& c);

  /// Leading term under grlex; polynomial must be nonzero.
  std::pair<Exponents, Rational> leading_term() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

  MultiPoly pow(int e) const;

  /// Substitutes a polynomial for one variable.
  MultiPoly substitute(int var, const MultiPoly& value) const;

  /// Substitutes var := num/den and clears the declared denominator:
  /// returns (den^deg * p(var := num/den), deg) where deg is the degree of p
  /// in var.  Throws invalid-substitution when den is the zero polynomial.
  std::pair<MultiPoly, int> substitute_rational(int var, const MultiPoly& num,
                                                const MultiPoly& den) const;

  /// Exact evaluation at rational points (r, s default to 0).
  Rational eval(const Rational& u, const Rational& v, const Rational& w,
                const Rational& r = Rational(0), const Rational& s = Rational(0)) const;

  /// Canonical printed form, grlex order, variables named u v w r s.
  std::string str() const;

  const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

private:
  // Greater-degree terms come last; leading term is rbegin().
  std::map<Exponents, Rational, GrlexLess> terms_;
};

/// Single-divisor multivariate division: p = quotient * divisor + remainder
/// with no remainder term divisible by the divisor's leading term.  For a
/// single divisor the remainder vanishes iff divisor | p, so a zero
/// remainder is a divisibility certificate.
struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

DivisionResult reduce_mod(const MultiPoly& p, const MultiPoly& divisor);

}  // namespace ratvec

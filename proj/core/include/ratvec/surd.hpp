#pragma once

#include <string>

#include "ratvec/rational.hpp"

namespace ratvec {

/// Approximation of an exact value: a binary64 value together with a
/// guaranteed absolute error bound.
struct ApproxValue {
  double value;
  Rational bound;
};

/// Quadratic surd a + b*sqrt(d) with rational a, b and a nonnegative integer
/// radicand d.  Canonical form: d == 0 exactly when the value is rational
/// (b == 0 as well in that case), and square factors of d up to the trial
/// division bound are pulled into b.  Immutable after construction; all
/// comparisons are exact.
class Surd {
public:
  Surd() : a_(0), b_(0), d_(0) {}
  Surd(const Rational& r) : a_(r), b_(0), d_(0) {}
  Surd(long n) : a_(n), b_(0), d_(0) {}

  /// Builds (a + b*sqrt(d))/c in canonical form.
  /// Throws: invalid-denominator (c == 0), unsupported-negative-radicand.
  static Surd make(const Rational& a, const Rational& b, const mpz_class& d,
                   const Rational& c);

  static Surd sqrt_of(const Rational& x);  // exact sqrt(x), x >= 0

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const mpz_class& d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  const Rational& rational_value() const;

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact three-way comparison.  Throws unsupported-comparison when both
  /// operands are irrational with distinct radicands.
  static int compare(const Surd& x, const Surd& y);

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Surd& x, const Surd& y) { return compare(x, y) != 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return compare(x, y) > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return compare(x, y) >= 0; }

  /// Deterministic enclosure of the value: the result is within abs_err of
  /// the exact value.  Throws std::domain_error unless abs_err > 0.
  ApproxValue approximate(const Rational& abs_err) const;

  double to_double() const;

  /// Cleared-denominator form "(A + B*sqrt(D))/C" (or "A/C" when rational).
  std::string str() const;

private:
  void normalize();

  Rational a_, b_;
  mpz_class d_;
};

inline int sign_of(const Surd& x) { return x.sign(); }
inline Surd abs_of(const Surd& x) { return x.sign() < 0 ? -x : x; }
inline double approx_of(const Surd& x) { return x.to_double(); }

}  // namespace ratvec

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratvec {

/// Arbitrary-precision rational.  Always canonical: denominator positive,
/// gcd(|numerator|, denominator) == 1.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d) {
    if (d == 0) throw std::domain_error("invalid-denominator: 0");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("invalid-denominator: 0");
    q_ = mpq_class(n) / mpq_class(d);
  }

  /// Exact conversion from a binary64 value.
  static Rational from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
  }

  /// Parses "p/q" or "n" (optional leading '-').
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("malformed rational: empty");
    for (char ch : text)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
        throw std::invalid_argument("malformed rational: " + text);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("malformed rational: " + text);
    if (mpq_denref(q.get_mpq_t())->_mp_size == 0)
      throw std::domain_error("invalid-denominator: 0");
    q.canonicalize();
    return Rational(q);
  }

  const mpz_class num() const { return q_.get_num(); }
  const mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  std::string str() const {
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
  mpq_class q_;
};

inline int sign_of(const Rational& x) { return x.sign(); }
inline Rational abs_of(const Rational& x) { return x.abs(); }
inline double approx_of(const Rational& x) { return x.to_double(); }

inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline double abs_of(double x) { return x < 0 ? -x : x; }
inline double approx_of(double x) { return x; }

}  // namespace ratvec

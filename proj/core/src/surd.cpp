#include "ratvec/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace ratvec {

namespace {

// Largest divisor tried when extracting square factors from the radicand.
constexpr unsigned long kTrialDivisionBound = 1000000UL;

}  // namespace

Surd Surd::make(const Rational& a, const Rational& b, const mpz_class& d,
                const Rational& c) {
  if (c.is_zero()) throw std::domain_error("invalid-denominator: c = 0");
  if (d < 0) throw std::domain_error("unsupported-negative-radicand");
  Surd s;
  s.a_ = a / c;
  s.b_ = b / c;
  s.d_ = d;
  s.normalize();
  return s;
}

Surd Surd::sqrt_of(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("unsupported-negative-radicand");
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class rad = x.num() * x.den();
  return make(Rational(0), Rational(1, 1) / Rational(x.den(), mpz_class(1)), rad,
              Rational(1));
}

void Surd::normalize() {
  if (b_.is_zero() || d_ == 0 || d_ == 1) {
    if (d_ != 0 && d_ == 1) a_ += b_;
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * Rational(root, mpz_class(1));
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  // Pull square factors f^2 out of d, up to the trial division bound.
  mpz_class extracted = 1;
  for (unsigned long f = 2; f <= kTrialDivisionBound; ++f) {
    mpz_class f2 = mpz_class(f) * f;
    if (f2 > d_) break;
    while (mpz_divisible_p(d_.get_mpz_t(), f2.get_mpz_t())) {
      d_ /= f2;
      extracted *= f;
    }
  }
  if (extracted != 1) b_ *= Rational(extracted, mpz_class(1));
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = 0;
  }
}

const Rational& Surd::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is irrational");
  return a_;
}

int Surd::sign() const {
  if (is_rational()) return a_.sign();
  int sa = a_.sign();
  int sb = b_.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_, mpz_class(1));
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

namespace {

// Checks the two operands live in a common quadratic field; returns the
// shared radicand (0 when both rational).
mpz_class common_radicand(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) throw std::domain_error("unsupported-comparison: incompatible radicands");
  return x.d();
}

}  // namespace

int Surd::compare(const Surd& x, const Surd& y) { return (x - y).sign(); }

Surd Surd::operator-() const {
  Surd s;
  s.a_ = -a_;
  s.b_ = -b_;
  s.d_ = d_;
  return s;
}

Surd operator+(const Surd& x, const Surd& y) {
  mpz_class d = common_radicand(x, y);
  Surd s;
  s.a_ = x.a_ + y.a_;
  s.b_ = x.b_ + y.b_;
  s.d_ = d;
  s.normalize();
  return s;
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  mpz_class d = common_radicand(x, y);
  Surd s;
  // (a1 + b1 e)(a2 + b2 e) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) e,  e = sqrt(d)
  s.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d, mpz_class(1));
  s.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  s.d_ = d;
  s.normalize();
  return s;
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  mpz_class d = common_radicand(x, y);
  // 1/(a + b e) = (a - b e) / (a^2 - b^2 d)
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d, mpz_class(1));
  Surd conj;
  conj.a_ = y.a_ / norm;
  conj.b_ = -y.b_ / norm;
  conj.d_ = d;
  conj.normalize();
  return x * conj;
}

ApproxValue Surd::approximate(const Rational& abs_err) const {
  if (abs_err.sign() <= 0) throw std::domain_error("abs_err must be positive");
  if (is_rational()) return {a_.to_double(), abs_err};
  // Dyadic enclosure of sqrt(d): with t = floor(sqrt(d * 4^kbits)),
  // sqrt(d) lies in [t, t+1] / 2^kbits.  Pick kbits so the propagated
  // width |b| / 2^kbits is at most abs_err / 2.
  Rational half_err = abs_err / Rational(2);
  Rational need = abs_of(b_) / half_err;  // require 2^kbits >= need
  unsigned long kbits = 1;
  {
    mpz_class pow2 = 2;
    mpz_class need_ceil = need.num() / need.den() + 1;
    while (pow2 < need_ceil) {
      pow2 *= 2;
      ++kbits;
    }
  }
  mpz_class scaled = d_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * kbits);
  mpz_class t;
  mpz_sqrt(t.get_mpz_t(), scaled.get_mpz_t());
  mpz_class pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), kbits);
  Rational lo(t, pow2);
  Rational hi(t + 1, pow2);
  Rational mid = a_ + b_ * ((lo + hi) / Rational(2));
  return {mid.to_double(), abs_err};
}

double Surd::to_double() const {
  if (is_rational()) return a_.to_double();
  // Rough magnitude, then a relative-precision enclosure.
  double rough = std::abs(a_.to_double()) +
                 std::abs(b_.to_double()) * std::sqrt(d_.get_d()) + 1.0;
  Rational err = Rational::from_double(rough) / Rational(mpz_class(1) << 80, mpz_class(1));
  return approximate(err).value;
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  // Clear denominators: value = (A + B*sqrt(D)) / C with integer A, B, C.
  mpz_class c = lcm(a_.den(), b_.den());
  mpz_class A = a_.num() * (c / a_.den());
  mpz_class B = b_.num() * (c / b_.den());
  std::string out = "(" + A.get_str();
  out += (B < 0) ? " - " : " + ";
  mpz_class absB = abs(B);
  if (absB != 1) out += absB.get_str() + "*";
  out += "sqrt(" + d_.get_str() + "))";
  if (c != 1) out += "/" + c.get_str();
  return out;
}

}  // namespace ratvec

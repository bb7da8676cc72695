#pragma once

#include "ratvec/rational.hpp"
#include "ratvec/surd.hpp"

namespace ratvec {

/// Realizations of the scalar tower: exact (Rational, Surd) or binary64.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct scalar_traits<Surd> {
  static constexpr bool is_exact = true;
  static Surd from_rational(const Rational& q) { return Surd(q); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double from_rational(const Rational& q) { return q.to_double(); }
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::is_exact;

template <class S>
S from_rational(const Rational& q) {
  return scalar_traits<S>::from_rational(q);
}

template <class S>
S from_int(long n) {
  return scalar_traits<S>::from_rational(Rational(n));
}

}  // namespace ratvec

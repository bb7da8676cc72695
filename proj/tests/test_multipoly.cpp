#include <doctest.h>

#include "ratvec/multipoly.hpp"

using namespace ratvec;

namespace {

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

MultiPoly random_poly(Rng& rng, int max_terms) {
  MultiPoly p;
  int terms = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < terms; ++i) {
    Exponents e{static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2)),
                static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 1)),
                static_cast<int>(rng.range(0, 1))};
    p.set_coeff(e, p.coeff(e) + Rational(rng.range(-5, 5), rng.range(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  MultiPoly R = MultiPoly::from_terms(table("R"));
  CHECK((R - R).is_zero());

  MultiPoly u = MultiPoly::variable(0), v = MultiPoly::variable(1);
  MultiPoly uv = u * v;
  CHECK(uv.term_count() == 1);
  CHECK(uv.coeff({1, 1, 0, 0, 0}) == Rational(1));

  // (1 - 4v + 4uv) * R has the leading structure of Q: degree 9
  MultiPoly Q = (MultiPoly::constant(Rational(1)) - MultiPoly::constant(Rational(4)) * v +
                 MultiPoly::constant(Rational(4)) * u * v) *
                R;
  CHECK(Q.total_degree() == 9);
  CHECK(R.total_degree() == 7);
  CHECK(R.term_count() == 23);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng{55};
  for (int i = 0; i < 60; ++i) {
    MultiPoly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
    CHECK((p + q) == (q + p));
    CHECK((p * q) == (q * p));
    CHECK(((p + q) + r) == (p + (q + r)));
    CHECK(((p * q) * r) == (p * (q * r)));
    CHECK((p * (q + r)) == (p * q + p * r));
  }
}

TEST_CASE("substitute") {
  MultiPoly k = MultiPoly::from_terms(table("k"));
  // identity substitution
  CHECK(k.substitute(2, MultiPoly::variable(2)) == k);
  // constant substitution agrees with evaluation
  MultiPoly at34 = k.substitute(2, MultiPoly::constant(Rational(3, 4)));
  CHECK(at34.eval(Rational(9, 32), Rational(4, 9), Rational(0)) ==
        k.eval(Rational(9, 32), Rational(4, 9), Rational(3, 4)));
}

TEST_CASE("substitute_rational clears the declared denominator") {
  MultiPoly k = MultiPoly::from_terms(table("k"));
  MultiPoly one = MultiPoly::constant(Rational(1));
  MultiPoly den = MultiPoly::constant(Rational(2)) * (one - MultiPoly::variable(0));
  auto [num, deg] = k.substitute_rational(2, one, den);
  CHECK(deg == 1);
  // check at a sample point: num = den^deg * k(u, v, 1/den)
  Rational u(1, 5), v(2, 7);
  Rational den_val = Rational(2) * (Rational(1) - u);
  CHECK(num.eval(u, v, Rational(0)) == den_val * k.eval(u, v, Rational(1) / den_val));
  CHECK_THROWS_AS(k.substitute_rational(2, one, MultiPoly()), std::domain_error);
}

TEST_CASE("reduce_mod basics") {
  MultiPoly R = MultiPoly::from_terms(table("R"));
  auto self = reduce_mod(R, R);
  CHECK(self.quotient == MultiPoly::constant(Rational(1)));
  CHECK(self.remainder.is_zero());

  MultiPoly u = MultiPoly::variable(0);
  auto scaled = reduce_mod(u * R, R);
  CHECK(scaled.quotient == u);
  CHECK(scaled.remainder.is_zero());

  // R cannot divide k (k is nonzero where R vanishes on the admissible set)
  MultiPoly k = MultiPoly::from_terms(table("k"));
  auto kr = reduce_mod(k, R);
  CHECK_FALSE(kr.remainder.is_zero());

  CHECK_THROWS_AS(reduce_mod(R, MultiPoly()), std::domain_error);
}

TEST_CASE("reduce_mod division identity on random inputs") {
  Rng rng{66};
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_poly(rng, 8);
    MultiPoly d = random_poly(rng, 4);
    if (d.is_zero()) continue;
    auto div = reduce_mod(p, d);
    CHECK((div.quotient * d + div.remainder) == p);
    // no remainder term divisible by the divisor's leading term
    auto [lt, lc] = d.leading_term();
    for (const auto& [e, c] : div.remainder.terms()) {
      bool divisible = true;
      for (int j = 0; j < 5; ++j)
        if (e[j] < lt[j]) divisible = false;
      CHECK_FALSE(divisible);
    }
  }
}

TEST_CASE("canonical printing") {
  MultiPoly p{{{1, 1, 0, 0, 0}, Rational(-2)}, {{0, 0, 0, 0, 0}, Rational(1)}};
  CHECK(p.str() == "-2*u*v + 1");
  CHECK(MultiPoly().str() == "0");
  CHECK(MultiPoly::variable(3).str() == "r");
}

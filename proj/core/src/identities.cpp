#include "ratvec/identities.hpp"

#include <stdexcept>

namespace ratvec {

namespace {

enum Var { U = 0, V = 1, W = 2, Rv = 3, Sv = 4 };

MultiPoly var(int i) { return MultiPoly::variable(i); }
MultiPoly c(long n) { return MultiPoly::constant(Rational(n)); }
MultiPoly c(long n, long d) { return MultiPoly::constant(Rational(n, d)); }

struct Polys {
  MultiPoly R, k, d, H, f, g, h;
};

Polys load(const MultiPoly& R) {
  return {R,
          MultiPoly::from_terms(table("k")),
          MultiPoly::from_terms(table("d")),
          MultiPoly::from_terms(table("H")),
          MultiPoly::from_terms(table("f")),
          MultiPoly::from_terms(table("g")),
          MultiPoly::from_terms(table("h"))};
}

IdentityResult from_difference(const std::string& name, const MultiPoly& diff,
                               std::string note = {}) {
  return {name, diff.is_zero(), diff, std::move(note)};
}

// -4vw + 4vwu + 1
MultiPoly s_denominator() {
  return c(-4) * var(V) * var(W) + c(4) * var(V) * var(W) * var(U) + c(1);
}

// Closed-form r = Nr/Dr and s = Ns/Ds from the reconstruction formulas.
struct ClosedForms {
  MultiPoly Nr, Dr, Ns, Ds;
};

ClosedForms closed_forms(const Polys& P) {
  MultiPoly one = c(1);
  return {P.k,
          c(2) * var(V) * (one - c(2) * var(U)) * (one - var(W)),
          c(2) * (one - var(U)) * var(V) * P.k,
          s_denominator() * var(V) * (one - c(2) * var(U))};
}

// Substitutes r := Nr/Dr and s := Ns/Ds into p and clears both declared
// denominators; returns the cleared numerator.
MultiPoly clear_rs(const MultiPoly& p, const ClosedForms& cf) {
  auto [after_r, deg_r] = p.substitute_rational(Rv, cf.Nr, cf.Dr);
  auto [after_s, deg_s] = after_r.substitute_rational(Sv, cf.Ns, cf.Ds);
  (void)deg_r;
  (void)deg_s;
  return after_s;
}

IdentityResult run(const std::string& name, const MultiPoly& R) {
  Polys P = load(R);
  MultiPoly one = c(1);

  if (name == "I1") {
    MultiPoly rhs = c(2) * var(V) * (c(4) * var(U) - one) * (one - var(W)) *
                        (one - c(2) * var(U)) * s_denominator() +
                    (c(-1) + c(4) * var(V) - c(4) * var(U) * var(V)) * P.R;
    return from_difference(name, P.d * P.k - rhs);
  }
  if (name == "I2") {
    MultiPoly lhs = P.R.substitute(V, c(1, 2));
    MultiPoly rhs = (one - var(W) - var(U)) * (c(2) * var(W) * var(U) - c(2) * var(W) + one);
    return from_difference(name, lhs - rhs);
  }
  if (name == "I3") {
    MultiPoly D = c(4) * (one - var(U)) * (one - var(V));
    auto [kn, deg] = P.k.substitute_rational(W, one, D);
    MultiPoly diff = c(2) * (one - var(V)) * kn -
                     (one - c(2) * var(V)) * (c(4) * var(U) - one) * D.pow(deg);
    return from_difference(name, diff, "cleared denominator power " + std::to_string(deg));
  }
  if (name == "I4") {
    MultiPoly D = c(2) * (one - var(U));
    auto [kn, deg] = P.k.substitute_rational(W, one, D);
    MultiPoly rhs = c(2) * (c(2) * var(V) - one) *
                    (var(V) - var(U) * var(V) - var(U)) * D.pow(deg);
    return from_difference(name, kn - rhs, "cleared denominator power " + std::to_string(deg));
  }
  if (name == "I5") {
    return from_difference(name, c(2) * P.k.substitute(W, c(3, 4)) - P.H);
  }
  if (name == "I6") {
    MultiPoly X1 = var(U) - one;
    MultiPoly X2 = var(Rv) * var(V);
    MultiPoly X3 = (var(Sv) - var(Rv)) * var(W) + var(Rv);
    MultiPoly S1 = c(4) * X1 * X2 * X3 + var(Rv) * var(Sv);
    MultiPoly S2 = c(4) * (X1 + X2 + X3) - c(3) * (c(-1) + var(Rv) + var(Sv));
    MultiPoly S3 = c(2) * (X1 * X2 + X1 * X3 + X2 * X3) -
                   (-var(Rv) - var(Sv) + var(Rv) * var(Sv));
    const MultiPoly* eqs[3] = {&P.f, &P.g, &P.h};
    const MultiPoly* subs[3] = {&S1, &S2, &S3};
    std::string note = "cancellation factors:";
    for (int i = 0; i < 3; ++i) {
      auto div = reduce_mod(*subs[i], *eqs[i]);
      if (!div.remainder.is_zero())
        return {name, false, div.remainder, "equation " + std::to_string(i + 1) + " not a multiple"};
      if (div.quotient.term_count() != 1)
        return {name, false, div.quotient, "factor is not a single term"};
      note += " [" + div.quotient.str() + "]";
    }
    return {name, true, MultiPoly(), note};
  }
  if (name == "I7") {
    ClosedForms cf = closed_forms(P);
    const MultiPoly* eqs[3] = {&P.f, &P.g, &P.h};
    const char* names[3] = {"f", "g", "h"};
    for (int i = 0; i < 3; ++i) {
      MultiPoly num = clear_rs(*eqs[i], cf);
      auto div = reduce_mod(num, P.R);
      if (!div.remainder.is_zero())
        return {name, false, div.remainder,
                std::string("numerator of ") + names[i] + " not divisible by R"};
    }
    return {name, true, MultiPoly(), "all three cleared numerators divisible by R"};
  }
  if (name == "I8") {
    MultiPoly lhs = c(2) * (one - var(U)) * var(V) * P.k * P.d -
                    c(4) * var(V) * (c(4) * var(U) - one) * (one - var(U)) * (one - var(W)) *
                        var(V) * (one - c(2) * var(U)) * s_denominator();
    auto div = reduce_mod(lhs, P.R);
    return {name, div.remainder.is_zero(), div.remainder,
            div.remainder.is_zero() ? "cofactor: " + div.quotient.str() : ""};
  }
  if (name == "I9") {
    MultiPoly diff = c(4) * (one - var(U)) * var(V) * (one - var(W)) - s_denominator() -
                     (c(4) * var(V) - c(4) * var(U) * var(V) - one);
    return from_difference(name, diff);
  }
  if (name == "I10") {
    // A = -2v(2u-1)(w-1) r + k, linear in r; replacing r by its closed form
    // and clearing the denominator must land in (R).
    MultiPoly A = c(-2) * var(V) * (c(2) * var(U) - one) * (var(W) - one) * var(Rv) + P.k;
    ClosedForms cf = closed_forms(P);
    auto [num, deg] = A.substitute_rational(Rv, cf.Nr, cf.Dr);
    auto div = reduce_mod(num, P.R);
    return {name, div.remainder.is_zero(), div.remainder,
            "cleared power " + std::to_string(deg) + ", cofactor: " + div.quotient.str()};
  }
  throw std::invalid_argument("unknown identity: " + name);
}

}  // namespace

IdentityResult verify_identity(const std::string& name) {
  return run(name, MultiPoly::from_terms(table("R")));
}

IdentityResult verify_identity(const std::string& name, const MultiPoly& R) {
  return run(name, R);
}

std::vector<IdentityResult> verify_all_identities() {
  std::vector<IdentityResult> out;
  for (int i = 1; i <= 10; ++i) out.push_back(verify_identity("I" + std::to_string(i)));
  return out;
}

}  // namespace ratvec

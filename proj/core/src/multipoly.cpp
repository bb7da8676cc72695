#include "ratvec/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ratvec {

namespace {

int total(const Exponents& e) { return e[0] + e[1] + e[2] + e[3] + e[4]; }

constexpr const char* kVarNames[5] = {"u", "v", "w", "r", "s"};

}  // namespace

bool GrlexLess::operator()(const Exponents& x, const Exponents& y) const {
  int tx = total(x), ty = total(y);
  if (tx != ty) return tx < ty;
  return x < y;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_[{0, 0, 0, 0, 0}] = c;
}

MultiPoly::MultiPoly(std::initializer_list<std::pair<Exponents, Rational>> terms) {
  for (const auto& [e, c] : terms) set_coeff(e, coeff(e) + c);
}

MultiPoly MultiPoly::from_terms(const TermList& terms) {
  MultiPoly p;
  for (const auto& t : terms) p.set_coeff(t.exps, p.coeff(t.exps) + t.coeff);
  return p;
}

MultiPoly MultiPoly::variable(int index) {
  if (index < 0 || index > 4) throw std::out_of_range("variable index");
  Exponents e{0, 0, 0, 0, 0};
  e[index] = 1;
  MultiPoly p;
  p.terms_[e] = Rational(1);
  return p;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : total(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
  int deg = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
  return deg;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const Rational& c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
  if (is_zero()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out = p;
  for (const auto& [e, c] : q.terms_) out.set_coeff(e, out.coeff(e) + c);
  return out;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out;
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      Exponents e;
      for (int i = 0; i < 5; ++i) e[i] = ep[i] + eq[i];
      out.set_coeff(e, out.coeff(e) + cp * cq);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  MultiPoly acc(Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    MultiPoly term;
    term.terms_[rest] = c;
    out = out + term * value.pow(e[var]);
  }
  return out;
}

std::pair<MultiPoly, int> MultiPoly::substitute_rational(int var, const MultiPoly& num,
                                                         const MultiPoly& den) const {
  if (den.is_zero()) throw std::domain_error("invalid-substitution: zero denominator");
  int deg = std::max(degree_in(var), 0);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    MultiPoly term;
    term.terms_[rest] = c;
    out = out + term * num.pow(e[var]) * den.pow(deg - e[var]);
  }
  return {out, deg};
}

Rational MultiPoly::eval(const Rational& u, const Rational& v, const Rational& w,
                         const Rational& r, const Rational& s) const {
  const Rational* vars[5] = {&u, &v, &w, &r, &s};
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < e[i]; ++j) t *= *vars[i];
    out += t;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (total(e) == 0 || mag != Rational(1)) {
      out << mag.str();
      printed = true;
    }
    for (int i = 0; i < 5; ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << kVarNames[i];
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

DivisionResult reduce_mod(const MultiPoly& p, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("invalid-divisor: zero");
  auto [lt_e, lt_c] = divisor.leading_term();
  MultiPoly quotient, remainder;
  MultiPoly work = p;
  while (!work.is_zero()) {
    auto [e, c] = work.leading_term();
    bool divisible = true;
    Exponents q;
    for (int i = 0; i < 5; ++i) {
      q[i] = e[i] - lt_e[i];
      if (q[i] < 0) divisible = false;
    }
    MultiPoly term;
    if (divisible) {
      term.set_coeff(q, c / lt_c);
      quotient = quotient + term;
      work = work - term * divisor;
    } else {
      term.set_coeff(e, c);
      remainder = remainder + term;
      work = work - term;
    }
  }
  return {quotient, remainder};
}

}  // namespace ratvec

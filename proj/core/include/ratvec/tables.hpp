#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ratvec/rational.hpp"
#include "ratvec/scalar.hpp"

namespace ratvec {

/// Exponent vector for the variables (u, v, w, r, s).
using Exponents = std::array<int, 5>;

struct TableTerm {
  Exponents exps;
  Rational coeff;
};

/// One named polynomial, as a flat term list in file order.
using TermList = std::vector<TableTerm>;

/// Parses the documented table format: "[name]" sections, one
/// "e_u e_v e_w e_r e_s : num/den" entry per line.
std::map<std::string, TermList> parse_poly_tables(const std::string& text);

/// The built-in tables (R, k, d, H, f, g, h), parsed once from the embedded
/// copy of core/data/poly_tables.txt.
const std::map<std::string, TermList>& poly_tables();

const TermList& table(const std::string& name);

/// Evaluates a three-variable table at (u, v, w): terms are collected by
/// w-power, each collected coefficient summed in canonical term order, then
/// combined by Horner in w.  This fixed order makes the float path
/// reproducible and identical in shape to the exact path.
template <class S>
S eval_table3(const TermList& terms, const S& u, const S& v, const S& w) {
  int wdeg = 0;
  for (const auto& t : terms) wdeg = std::max(wdeg, t.exps[2]);
  auto pow = [](const S& x, int e) {
    S acc = from_int<S>(1);
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
  };
  S result = from_int<S>(0);
  for (int j = wdeg; j >= 0; --j) {
    S coeff = from_int<S>(0);
    for (const auto& t : terms) {
      if (t.exps[2] != j) continue;
      coeff = coeff + from_rational<S>(t.coeff) * pow(u, t.exps[0]) * pow(v, t.exps[1]);
    }
    result = result * w + coeff;
  }
  return result;
}

}  // namespace ratvec

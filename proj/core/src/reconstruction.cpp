#include "ratvec/reconstruction.hpp"

#include <algorithm>

namespace ratvec {

std::vector<SolveWRoot> solve_w(const Rational& u, const Rational& v) {
  // Collect R(u, v, w) = A w^2 + B w + C.
  Rational A(0), B(0), C(0);
  for (const auto& term : table("R")) {
    Rational val = term.coeff;
    for (int j = 0; j < term.exps[0]; ++j) val *= u;
    for (int j = 0; j < term.exps[1]; ++j) val *= v;
    switch (term.exps[2]) {
      case 0: C += val; break;
      case 1: B += val; break;
      case 2: A += val; break;
      default: throw std::logic_error("R has w-degree > 2");
    }
  }
  std::vector<Surd> roots;
  if (A.is_zero()) {
    if (!B.is_zero()) roots.push_back(Surd(-C / B));
  } else {
    Rational disc = B * B - Rational(4) * A * C;
    if (disc.sign() == 0) {
      roots.push_back(Surd(-B / (Rational(2) * A)));
    } else if (disc.sign() > 0) {
      Surd root_disc = Surd::sqrt_of(disc);
      Surd base(-B / (Rational(2) * A));
      Surd half(Rational(1) / (Rational(2) * A));
      roots.push_back(base - half * root_disc);
      roots.push_back(base + half * root_disc);
      std::sort(roots.begin(), roots.end());
    }
  }
  std::vector<SolveWRoot> out;
  for (const auto& w : roots)
    out.push_back({w, is_ratio_vector(Surd(u), Surd(v), w)});
  return out;
}

LineFamilyResult line_family(const Rational& C) {
  LineFamilyResult out;
  out.point = {C, Rational(1, 2), Rational(1) - C};
  out.verdict = is_ratio_vector(out.point.u, out.point.v, out.point.w);
  out.k_closed_form = C * (Rational(-1) + Rational(4) * C - Rational(2) * C * C);
  if (out.verdict.is_ratio_vector)
    out.reconstruction = reconstruct(out.point.u, out.point.v, out.point.w);
  return out;
}

}  // namespace ratvec

#pragma once

#include <string>
#include <vector>

#include "ratvec/scalar.hpp"
#include "ratvec/tables.hpp"

namespace ratvec {

/// Membership region for admissible ratio vectors.  Z1, Z2, Z3 are pairwise
/// disjoint by construction: Z1 forces v < 1/2, Z2 forces v >= 1/2, and Z3
/// forces u > 1/3 while Z1, Z2 force u <= 1/3.  BoundaryIndeterminate is a
/// float-only refusal for points within boundary_tol of a defining boundary.
enum class RegionLabel { Z1, Z2, Z3, Outside, BoundaryIndeterminate };

std::string to_string(RegionLabel label);

template <class S>
S eval_R(const S& u, const S& v, const S& w) {
  return eval_table3(table("R"), u, v, w);
}

template <class S>
S eval_k(const S& u, const S& v, const S& w) {
  return eval_table3(table("k"), u, v, w);
}

template <class S>
S eval_d(const S& u, const S& v, const S& w) {
  return eval_table3(table("d"), u, v, w);
}

/// Q = (1 - 4v + 4uv) * R.
template <class S>
S eval_Q(const S& u, const S& v, const S& w) {
  S one = from_int<S>(1);
  S four = from_int<S>(4);
  return (one - four * v + four * u * v) * eval_R(u, v, w);
}

/// Universal strict bounds (1/(n-k+1), k/(k+1)) on the kth ratio of a
/// degree-n polynomial with distinct real roots.
std::pair<Rational, Rational> peyser_bounds(int n, int k);

template <class S>
struct BoundCheck {
  std::string name;
  S value;       // the bound itself
  bool satisfied;
  S margin;      // distance to the bound, positive when satisfied strictly
};

/// The sharpened ratio-vector bounds:
///   1/(4(1-u)) < v < 1/(4(1-u)w)
///   1/(4(1-v)) < w < 1/(4(1-u)(1-v))
///   w < 1/(2(1-u))
template <class S>
std::vector<BoundCheck<S>> l1_bounds(const S& u, const S& v, const S& w) {
  S one = from_int<S>(1);
  S two = from_int<S>(2);
  S four = from_int<S>(4);
  if (sign_of(one - u) <= 0 || sign_of(one - v) <= 0 || sign_of(w) <= 0)
    throw std::domain_error("invalid-point: bound denominators degenerate");
  std::vector<BoundCheck<S>> out;
  auto lower = [&](std::string name, const S& val, const S& bound) {
    S margin = val - bound;
    out.push_back({std::move(name), bound, sign_of(margin) > 0, margin});
  };
  auto upper = [&](std::string name, const S& val, const S& bound) {
    S margin = bound - val;
    out.push_back({std::move(name), bound, sign_of(margin) > 0, margin});
  };
  lower("v_lower", v, one / (four * (one - u)));
  upper("v_upper", v, one / (four * (one - u) * w));
  lower("w_lower", w, one / (four * (one - v)));
  upper("w_upper", w, one / (four * (one - u) * (one - v)));
  upper("w_half", w, one / (two * (one - u)));
  return out;
}

namespace detail {

/// Three-way comparison used by the classifier.  Exact scalars compare
/// exactly; floats within boundary_tol of equality report 0.
template <class S>
int boundary_cmp(const S& lhs, const S& rhs, double boundary_tol) {
  if constexpr (is_exact_v<S>) {
    (void)boundary_tol;
    return sign_of(lhs - rhs);
  } else {
    double diff = lhs - rhs;
    if (diff > -boundary_tol && diff < boundary_tol) return 0;
    return diff > 0 ? 1 : -1;
  }
}

}  // namespace detail

/// Classifies (u,v,w) against the printed region definitions, boundary
/// conventions literal: u <= 1/3 closed in Z1, Z2; v >= 1/2 closed in Z2;
/// everything else strict; Z2, Z3 additionally require v < 2/3.
template <class S>
RegionLabel classify_region(const S& u, const S& v, const S& w,
                            double boundary_tol = 1e-12) {
  S one = from_int<S>(1);
  S two = from_int<S>(2);
  S four = from_int<S>(4);
  auto frac = [](long n, long d) { return from_rational<S>(Rational(n, d)); };

  struct Boundary {
    S lhs, rhs;
  };
  const S vb1 = one / (four * (one - u));            // lower bound on v in Z1, Z3
  const S vb2 = one / (four * (one - u) * w);        // upper bound on v in Z2, Z3
  const S wb1 = one / (four * (one - u) * (one - v));  // upper bound on w in Z1
  const S wb2 = one / (two * (one - u));             // upper bound on w in Z2
  const Boundary boundaries[] = {
      {u, frac(1, 4)}, {u, frac(1, 3)}, {u, frac(1, 2)},
      {v, frac(1, 2)}, {v, frac(2, 3)}, {v, vb1}, {v, vb2},
      {w, frac(1, 2)}, {w, frac(3, 4)}, {w, wb1}, {w, wb2},
  };
  if constexpr (!is_exact_v<S>) {
    for (const auto& b : boundaries)
      if (detail::boundary_cmp(b.lhs, b.rhs, boundary_tol) == 0)
        return RegionLabel::BoundaryIndeterminate;
  }
  auto lt = [&](const S& x, const S& y) { return detail::boundary_cmp(x, y, boundary_tol) < 0; };
  auto le = [&](const S& x, const S& y) { return detail::boundary_cmp(x, y, boundary_tol) <= 0; };

  bool z1 = lt(frac(1, 4), u) && le(u, frac(1, 3)) && lt(vb1, v) && lt(v, frac(1, 2)) &&
            lt(frac(1, 2), w) && lt(w, wb1);
  bool z2 = lt(frac(1, 4), u) && le(u, frac(1, 3)) && lt(frac(1, 2), w) && lt(w, wb2) &&
            le(frac(1, 2), v) && lt(v, vb2) && lt(v, frac(2, 3));
  bool z3 = lt(frac(1, 3), u) && lt(u, frac(1, 2)) && lt(frac(1, 2), w) && lt(w, frac(3, 4)) &&
            lt(vb1, v) && lt(v, vb2) && lt(v, frac(2, 3));
  if (z1) return RegionLabel::Z1;
  if (z2) return RegionLabel::Z2;
  if (z3) return RegionLabel::Z3;
  return RegionLabel::Outside;
}

template <class S>
struct MembershipVerdict {
  bool is_ratio_vector = false;
  RegionLabel region = RegionLabel::Outside;
  S R_value;
  S k_value;
  std::vector<BoundCheck<S>> bounds;
  bool used_float_tolerance = false;  // |R| <= R_tol stood in for R == 0
};

/// Full membership decision: (u,v,w) is a ratio vector of a quartic with
/// four distinct real roots iff R vanishes and the point lies in one of the
/// three admissible regions.  Exact scalars test R == 0 exactly; floats use
/// |R| <= R_tol and record that a tolerance was applied.
template <class S>
MembershipVerdict<S> is_ratio_vector(const S& u, const S& v, const S& w,
                                     double R_tol = 1e-9, double boundary_tol = 1e-12) {
  MembershipVerdict<S> verdict;
  verdict.R_value = eval_R(u, v, w);
  verdict.k_value = eval_k(u, v, w);
  verdict.region = classify_region(u, v, w, boundary_tol);
  bool on_surface;
  if constexpr (is_exact_v<S>) {
    on_surface = sign_of(verdict.R_value) == 0;
  } else {
    on_surface = abs_of(verdict.R_value) <= R_tol;
    verdict.used_float_tolerance = true;
  }
  bool in_region = verdict.region == RegionLabel::Z1 || verdict.region == RegionLabel::Z2 ||
                   verdict.region == RegionLabel::Z3;
  verdict.is_ratio_vector = on_surface && in_region;
  if (in_region) verdict.bounds = l1_bounds(u, v, w);
  return verdict;
}

}  // namespace ratvec

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ratvec/characterization.hpp"
#include "ratvec/quartic.hpp"
#include "ratvec/surd.hpp"

namespace ratvec {

/// Canonical quartic recovered from an admissible ratio vector:
/// p(x) = (x+1)x(x-r)(x-s) with 0 < r < s, together with the closed-form
/// critical points (u-1, rv, (s-r)w + r).
template <class S>
struct ReconstructionResult {
  S r, s;
  std::array<S, 5> coeffs;           // p = c0 + c1 x + c2 x^2 + c3 x^3 + c4 x^4
  std::array<S, 3> predicted_crits;  // u-1, rv, (s-r)w + r
  bool off_variety = false;          // set in unchecked mode when R != 0
};

/// Closed-form inverse map:
///   r = k / (2v(1-2u)(1-w))
///   s = 2(1-u)v k / ((-4vw+4vwu+1) v (1-2u))
/// Checked mode requires is_ratio_vector(u,v,w); unchecked mode evaluates
/// the formulas anyway and flags points off the surface R = 0.
template <class S>
ReconstructionResult<S> reconstruct(const S& u, const S& v, const S& w,
                                    bool unchecked = false, double R_tol = 1e-9) {
  S one = from_int<S>(1);
  S two = from_int<S>(2);
  S four = from_int<S>(4);
  if (!unchecked) {
    auto verdict = is_ratio_vector(u, v, w, R_tol);
    if (!verdict.is_ratio_vector) throw std::domain_error("not-a-ratio-vector");
  }
  S kval = eval_k(u, v, w);
  S den_r = two * v * (one - two * u) * (one - w);
  S den_s = (-four * v * w + four * v * w * u + one) * v * (one - two * u);
  if (sign_of(den_r) == 0 || sign_of(den_s) == 0)
    throw std::domain_error("formula-degenerate: reconstruction denominator vanishes");
  ReconstructionResult<S> out;
  out.r = kval / den_r;
  out.s = two * (one - u) * v * kval / den_s;
  S rs = out.r * out.s;
  out.coeffs = {from_int<S>(0), rs, rs - out.r - out.s, one - out.r - out.s, one};
  out.predicted_crits = {u - one, out.r * v, (out.s - out.r) * w + out.r};
  if (unchecked) {
    S R = eval_R(u, v, w);
    if constexpr (is_exact_v<S>)
      out.off_variety = sign_of(R) != 0;
    else
      out.off_variety = !(abs_of(R) <= R_tol);
  }
  return out;
}

/// The alternative closed form s = 4v(4u-1)(1-u)(1-w) / d(u,v,w); agrees
/// with the primary formula whenever R = 0 and both denominators are
/// nonzero.  Throws formula-degenerate when d vanishes.
template <class S>
S reconstruct_s_alt(const S& u, const S& v, const S& w) {
  S one = from_int<S>(1);
  S four = from_int<S>(4);
  S dval = eval_d(u, v, w);
  if (sign_of(dval) == 0) throw std::domain_error("formula-degenerate: d = 0");
  return four * v * (four * u - one) * (one - u) * (one - w) / dval;
}

struct SolveWRoot {
  Surd w;
  MembershipVerdict<Surd> verdict;
};

/// Collects R(u,v,.) as a quadratic in w and returns its real roots as exact
/// surds, each paired with the membership verdict of (u, v, root).  The
/// linear case (leading coefficient zero) is handled; an empty list means no
/// real roots.
std::vector<SolveWRoot> solve_w(const Rational& u, const Rational& v);

struct LineFamilyResult {
  RatioVector<Rational> point;  // (C, 1/2, 1-C)
  MembershipVerdict<Rational> verdict;
  Rational k_closed_form;       // C(-1 + 4C - 2C^2)
  std::optional<ReconstructionResult<Rational>> reconstruction;
};

/// The line u = C, v = 1/2, w = 1 - C lies on the surface R = 0 for every C;
/// the point is a ratio vector exactly when 1 - sqrt(2)/2 < C < 1/2.
LineFamilyResult line_family(const Rational& C);

template <class S>
struct RoundTripReport {
  ReconstructionResult<S> reconstruction;
  std::array<S, 3> deviation;          // forward ratios minus (u, v, w)
  std::array<S, 3> pprime_residuals;   // p' at the predicted critical points
};

namespace detail {

template <class S>
S eval_pprime(const std::array<S, 5>& c, const S& x) {
  // derivative of c0 + c1 x + c2 x^2 + c3 x^3 + c4 x^4
  S acc = from_int<S>(4) * c[4];
  acc = acc * x + from_int<S>(3) * c[3];
  acc = acc * x + from_int<S>(2) * c[2];
  acc = acc * x + c[1];
  return acc;
}

}  // namespace detail

/// Reconstructs and runs the forward map back over the recovered quartic.
/// Exact realizations verify p' vanishes identically at the predicted
/// critical points, making the ratio deviation exactly zero; the float path
/// re-isolates the critical points by bisection at the given tolerance.
template <class S>
RoundTripReport<S> round_trip(const S& u, const S& v, const S& w, const S& tol,
                              double R_tol = 1e-9) {
  RoundTripReport<S> report;
  report.reconstruction = reconstruct(u, v, w, /*unchecked=*/false, R_tol);
  const auto& rec = report.reconstruction;
  for (int i = 0; i < 3; ++i)
    report.pprime_residuals[i] = detail::eval_pprime(rec.coeffs, rec.predicted_crits[i]);
  if constexpr (is_exact_v<S>) {
    for (int i = 0; i < 3; ++i) {
      if (sign_of(report.pprime_residuals[i]) != 0)
        throw std::logic_error("round-trip: predicted critical point is not a zero of p'");
    }
    // With p'(x_i) = 0 certified, the ratios of (-1, 0, r, s) are exactly
    // (x1+1, x2/r, (x3-r)/(s-r)) = (u, v, w).
    S zero = from_int<S>(0);
    report.deviation = {(rec.predicted_crits[0] + from_int<S>(1)) - u,
                        rec.predicted_crits[1] / rec.r - v,
                        (rec.predicted_crits[2] - rec.r) / (rec.s - rec.r) - w};
    (void)zero;
  } else {
    QuarticRoots<S> roots{from_int<S>(-1), from_int<S>(0), rec.r, rec.s};
    RatioVector<S> fwd = forward_ratio_vector(roots, tol);
    report.deviation = {fwd.u - u, fwd.v - v, fwd.w - w};
  }
  return report;
}

}  // namespace ratvec

#pragma once

#include <array>
#include <stdexcept>

#include "ratvec/scalar.hpp"

namespace ratvec {

/// Four distinct real roots, strictly increasing.
template <class S>
struct QuarticRoots {
  S r1, r2, r3, r4;

  void validate() const {
    if (!(sign_of(r2 - r1) > 0 && sign_of(r3 - r2) > 0 && sign_of(r4 - r3) > 0))
      throw std::domain_error("degenerate-roots: roots must be strictly increasing");
    if constexpr (!is_exact_v<S>) {
      // Ratio denominators vanish numerically below this relative gap.
      S span = r4 - r1;
      S min_gap = span * from_rational<S>(Rational(1, 1000000000L));
      if (r2 - r1 < min_gap || r3 - r2 < min_gap || r4 - r3 < min_gap)
        throw std::domain_error("degenerate-roots: root gap below 1e-9 of the span");
    }
  }
};

/// Canonical frame (-1, 0, r, s) with 0 < r < s.
template <class S>
struct CanonicalQuartic {
  S r, s;
};

/// Increasing affine change of variable t(x) = scale*x + shift.
template <class S>
struct AffineMap {
  S scale, shift;
  S operator()(const S& x) const { return scale * x + shift; }
};

/// Critical points x1 < x2 < x3 of the monic quartic, one per root gap.
/// certified_interval_width bounds the enclosure produced by bisection
/// (0 when the evaluation found an exact zero).
template <class S>
struct CriticalPoints {
  S x1, x2, x3;
  S certified_interval_width;
};

template <class S>
struct RatioVector {
  S u, v, w;
};

/// Maps arbitrary roots to the canonical frame: the increasing affine map
/// t(x) = (x - r2)/(r2 - r1) sends (r1,r2,r3,r4) to (-1, 0, r, s).
template <class S>
std::pair<CanonicalQuartic<S>, AffineMap<S>> normalize_roots(const QuarticRoots<S>& roots) {
  roots.validate();
  S gap = roots.r2 - roots.r1;
  CanonicalQuartic<S> canon{(roots.r3 - roots.r2) / gap, (roots.r4 - roots.r2) / gap};
  AffineMap<S> map{from_int<S>(1) / gap, -roots.r2 / gap};
  return {canon, map};
}

namespace detail {

/// p'(x) for monic p with the given roots: sum over i of prod_{j != i} (x - r_j).
template <class S>
S quartic_derivative(const QuarticRoots<S>& roots, const S& x) {
  std::array<S, 4> diff{x - roots.r1, x - roots.r2, x - roots.r3, x - roots.r4};
  S out = from_int<S>(0);
  for (int i = 0; i < 4; ++i) {
    S term = from_int<S>(1);
    for (int j = 0; j < 4; ++j)
      if (j != i) term = term * diff[j];
    out = out + term;
  }
  return out;
}

}  // namespace detail

/// Isolates the three roots of p' by sign-change bisection, one per open
/// interval between consecutive roots (the brackets are certified by Rolle
/// interlacing; for monic p the derivative signs at the roots alternate
/// starting negative).
template <class S>
CriticalPoints<S> critical_points(const QuarticRoots<S>& roots, const S& tol) {
  roots.validate();
  if (!(sign_of(tol) > 0)) throw std::domain_error("tol must be positive");
  std::array<S, 4> r{roots.r1, roots.r2, roots.r3, roots.r4};
  std::array<S, 3> xs{from_int<S>(0), from_int<S>(0), from_int<S>(0)};
  S max_width = from_int<S>(0);
  S two = from_int<S>(2);
  for (int k = 0; k < 3; ++k) {
    S lo = r[k], hi = r[k + 1];
    S width_goal = tol * (hi - lo);
    int sign_lo = (k % 2 == 0) ? -1 : 1;  // sign of p' at the left endpoint
    bool exact_hit = false;
    for (int iter = 0; iter < 200; ++iter) {
      S mid = (lo + hi) / two;
      int sm = sign_of(detail::quartic_derivative(roots, mid));
      if (sm == 0) {
        xs[k] = mid;
        exact_hit = true;
        break;
      }
      if (sm == sign_lo)
        lo = mid;
      else
        hi = mid;
      if (sign_of(hi - lo - width_goal) <= 0) break;
    }
    if (!exact_hit) {
      S width = hi - lo;
      if (sign_of(width - width_goal) > 0)
        throw std::runtime_error("no-convergence: bisection iteration cap exceeded");
      xs[k] = (lo + hi) / two;
      if (sign_of(width - max_width) > 0) max_width = width;
    }
  }
  return {xs[0], xs[1], xs[2], max_width};
}

/// The ratio vector sigma_k = (x_k - r_k)/(r_{k+1} - r_k).
template <class S>
RatioVector<S> forward_ratio_vector(const QuarticRoots<S>& roots, const S& tol) {
  CriticalPoints<S> cp = critical_points(roots, tol);
  return {(cp.x1 - roots.r1) / (roots.r2 - roots.r1),
          (cp.x2 - roots.r2) / (roots.r3 - roots.r2),
          (cp.x3 - roots.r3) / (roots.r4 - roots.r3)};
}

/// Residuals |E_j(roots) - E_j(crits)| of the averaged elementary symmetric
/// functions, E_j = e_j / C(n, j) with n = 4 on roots and n = 3 on critical
/// points; all three vanish when the crits are the true critical points.
template <class S>
std::array<S, 3> symmetric_check(const QuarticRoots<S>& roots, const CriticalPoints<S>& crits) {
  const S &a = roots.r1, &b = roots.r2, &c = roots.r3, &d = roots.r4;
  const S &x = crits.x1, &y = crits.x2, &z = crits.x3;
  S e1r = (a + b + c + d) / from_int<S>(4);
  S e2r = (a * b + a * c + a * d + b * c + b * d + c * d) / from_int<S>(6);
  S e3r = (a * b * c + a * b * d + a * c * d + b * c * d) / from_int<S>(4);
  S e1x = (x + y + z) / from_int<S>(3);
  S e2x = (x * y + x * z + y * z) / from_int<S>(3);
  S e3x = x * y * z;
  return {abs_of(e1r - e1x), abs_of(e2r - e2x), abs_of(e3r - e3x)};
}

}  // namespace ratvec

#include <doctest.h>

#include <cmath>

#include "ratvec/quartic.hpp"

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
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

QuarticRoots<double> random_roots(Rng& rng) {
  for (;;) {
    double a[4];
    for (double& x : a) x = 2.0 * rng.uniform() - 1.0;
    std::sort(std::begin(a), std::end(a));
    if (a[1] - a[0] > 1e-3 && a[2] - a[1] > 1e-3 && a[3] - a[2] > 1e-3)
      return {a[0], a[1], a[2], a[3]};
  }
}

}  // namespace

TEST_CASE("normalize_roots examples") {
  // already canonical
  auto [c1, m1] = normalize_roots<Rational>({Rational(-1), Rational(0), Rational(1, 4), Rational(1, 2)});
  CHECK(c1.r == Rational(1, 4));
  CHECK(c1.s == Rational(1, 2));
  CHECK(m1.scale == Rational(1));
  CHECK(m1.shift == Rational(0));

  // affine-map oracle: t(x) = 2x - 3 sends (1, 3/2, 13/8, 7/4) to (-1, 0, 1/4, 1/2)
  auto [c2, m2] = normalize_roots<Rational>({Rational(1), Rational(3, 2), Rational(13, 8), Rational(7, 4)});
  CHECK(c2.r == Rational(1, 4));
  CHECK(c2.s == Rational(1, 2));
  CHECK(m2.scale == Rational(2));
  CHECK(m2.shift == Rational(-3));
  CHECK(m2(Rational(13, 8)) == Rational(1, 4));

  auto [c3, m3] = normalize_roots<Rational>({Rational(0), Rational(1), Rational(2), Rational(3)});
  CHECK(c3.r == Rational(1));
  CHECK(c3.s == Rational(2));
  CHECK(m3.scale == Rational(1));
  CHECK(m3.shift == Rational(-1));
}

TEST_CASE("normalize_roots rejects non-increasing roots") {
  CHECK_THROWS_AS((normalize_roots<double>({0.0, 0.0, 1.0, 2.0})), std::domain_error);
  CHECK_THROWS_AS((normalize_roots<double>({3.0, 2.0, 1.0, 0.0})), std::domain_error);
  // relative min-gap cutoff on the float path
  CHECK_THROWS_AS((normalize_roots<double>({0.0, 1e-11, 1.0, 2.0})), std::domain_error);
}

TEST_CASE("critical_points reproduces the first worked example") {
  QuarticRoots<double> roots{1.0, 1.5, 1.625, 1.75};
  auto cp = critical_points(roots, 1e-12);
  CHECK(cp.x1 == doctest::Approx(1.1506).epsilon(5e-4));
  CHECK(cp.x2 == doctest::Approx(1.5560).epsilon(5e-4));
  CHECK(cp.x3 == doctest::Approx(1.6996).epsilon(5e-4));
}

TEST_CASE("critical_points of the symmetric biquadratic match the closed form") {
  // p = x^4 - (5/4)x^2 + 1/4, p' = x(4x^2 - 5/2), zeros 0 and +-sqrt(10)/4
  QuarticRoots<double> roots{-1.0, -0.5, 0.5, 1.0};
  auto cp = critical_points(roots, 1e-14);
  double root10_over4 = std::sqrt(10.0) / 4.0;
  CHECK(cp.x1 == doctest::Approx(-root10_over4).epsilon(1e-10));
  CHECK(std::abs(cp.x2) < 1e-10);
  CHECK(cp.x3 == doctest::Approx(root10_over4).epsilon(1e-10));
}

TEST_CASE("critical_points in exact arithmetic finds exact zeros when they are dyadic") {
  // p' of (x+1)x(x-1/20)(x-21/20) vanishes at -7/10, 1/40, 3/4
  QuarticRoots<Rational> roots{Rational(-1), Rational(0), Rational(1, 20), Rational(21, 20)};
  CHECK(detail::quartic_derivative(roots, Rational(-7, 10)) == Rational(0));
  CHECK(detail::quartic_derivative(roots, Rational(1, 40)) == Rational(0));
  CHECK(detail::quartic_derivative(roots, Rational(3, 4)) == Rational(0));
  auto cp = critical_points(roots, Rational(1, 1000000000L));
  CHECK((cp.x1 - Rational(-7, 10)).abs() <= Rational(1, 100000000L));
  CHECK((cp.x2 - Rational(1, 40)).abs() <= Rational(1, 100000000L));
  CHECK((cp.x3 - Rational(3, 4)).abs() <= Rational(1, 100000000L));
}

TEST_CASE("forward_ratio_vector examples") {
  auto rv1 = forward_ratio_vector<double>({1.0, 1.5, 1.625, 1.75}, 1e-12);
  CHECK(rv1.u == doctest::Approx(0.3013).epsilon(5e-4));
  CHECK(rv1.v == doctest::Approx(0.4481).epsilon(5e-4));
  CHECK(rv1.w == doctest::Approx(0.5968).epsilon(5e-4));

  auto rv2 = forward_ratio_vector<double>({-1.0, 0.0, 0.05, 1.05}, 1e-13);
  CHECK(rv2.u == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(rv2.v == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rv2.w == doctest::Approx(0.7).epsilon(1e-9));

  // biquadratic closed form (2 - sqrt(10)/2, 1/2, sqrt(10)/2 - 1)
  auto rv3 = forward_ratio_vector<double>({-1.0, -0.5, 0.5, 1.0}, 1e-13);
  CHECK(rv3.u == doctest::Approx(2.0 - std::sqrt(10.0) / 2.0).epsilon(1e-10));
  CHECK(rv3.v == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rv3.w == doctest::Approx(std::sqrt(10.0) / 2.0 - 1.0).epsilon(1e-10));
}

TEST_CASE("symmetric_check residuals") {
  QuarticRoots<double> roots{1.0, 1.5, 1.625, 1.75};
  auto cp = critical_points(roots, 1e-12);
  auto res = symmetric_check(roots, cp);
  CHECK(res[0] <= 1e-9);
  CHECK(res[1] <= 1e-9);
  CHECK(res[2] <= 1e-9);

  // exact zero residuals for a rational configuration with known crits
  QuarticRoots<Rational> qroots{Rational(-1), Rational(0), Rational(1, 20), Rational(21, 20)};
  CriticalPoints<Rational> qcrits{Rational(-7, 10), Rational(1, 40), Rational(3, 4), Rational(0)};
  auto exact = symmetric_check(qroots, qcrits);
  CHECK(exact[0] == Rational(0));
  CHECK(exact[1] == Rational(0));
  CHECK(exact[2] == Rational(0));

  // a perturbed crit triple must register
  CriticalPoints<double> wrong{cp.x1, cp.x2 + 0.1, cp.x3, 0.0};
  auto bad = symmetric_check(roots, wrong);
  CHECK((bad[0] > 1e-3 || bad[1] > 1e-3 || bad[2] > 1e-3));
}

TEST_CASE("interlacing, Peyser strictness, and monotonicity on random quartics") {
  Rng rng{123};
  for (int i = 0; i < 300; ++i) {
    auto roots = random_roots(rng);
    auto cp = critical_points(roots, 1e-12);
    CHECK(roots.r1 < cp.x1);
    CHECK(cp.x1 < roots.r2);
    CHECK(roots.r2 < cp.x2);
    CHECK(cp.x2 < roots.r3);
    CHECK(roots.r3 < cp.x3);
    CHECK(cp.x3 < roots.r4);
    auto rv = forward_ratio_vector(roots, 1e-12);
    CHECK(0.25 < rv.u);
    CHECK(rv.u < 0.5);
    CHECK(1.0 / 3.0 < rv.v);
    CHECK(rv.v < 2.0 / 3.0);
    CHECK(0.5 < rv.w);
    CHECK(rv.w < 0.75);
    CHECK(rv.u < rv.v);
    CHECK(rv.v < rv.w);
    auto res = symmetric_check(roots, cp);
    CHECK(res[0] <= 1e-9);
    CHECK(res[1] <= 1e-9);
    CHECK(res[2] <= 1e-9);
  }
}

TEST_CASE("affine invariance and the reflection law") {
  Rng rng{456};
  for (int i = 0; i < 200; ++i) {
    auto roots = random_roots(rng);
    double tol = 1e-12;
    auto rv = forward_ratio_vector(roots, tol);

    double a = 0.1 + 3.0 * rng.uniform();
    double b = 2.0 * rng.uniform() - 1.0;
    QuarticRoots<double> mapped{a * roots.r1 + b, a * roots.r2 + b, a * roots.r3 + b,
                                a * roots.r4 + b};
    auto rv2 = forward_ratio_vector(mapped, tol);
    CHECK(std::abs(rv2.u - rv.u) <= 10 * tol);
    CHECK(std::abs(rv2.v - rv.v) <= 10 * tol);
    CHECK(std::abs(rv2.w - rv.w) <= 10 * tol);

    QuarticRoots<double> reflected{-roots.r4, -roots.r3, -roots.r2, -roots.r1};
    auto rv3 = forward_ratio_vector(reflected, tol);
    CHECK(std::abs(rv3.u - (1.0 - rv.w)) <= 10 * tol);
    CHECK(std::abs(rv3.v - (1.0 - rv.v)) <= 10 * tol);
    CHECK(std::abs(rv3.w - (1.0 - rv.u)) <= 10 * tol);
  }
}

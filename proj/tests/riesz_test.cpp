#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "riesz/riesz.hpp"
#include "support.hpp"

using namespace riesz;
using testing_support::coeff_gap;
using testing_support::rel_l2;

namespace {

const ManifoldId kS1 = ManifoldId::circle();
const ManifoldId kS2 = ManifoldId::sphere();

BandLimited sine(int n) {
  BandLimited f(kS1, n);
  f.circle(n) = cplx(0, -0.5);
  f.circle(-n) = cplx(0, 0.5);
  f.mark_real();
  return f;
}

BandLimited cosine(int n) {
  BandLimited f(kS1, n);
  f.circle(n) = f.circle(-n) = 0.5;
  f.mark_real();
  return f;
}

// (omega/pi^2) sum_{k > K} 2/(k - 1/2)^2 by brute force plus the integral remainder.
long double tail_oracle(double omega, int K) {
  const long M = 4000000;
  long double s = 0;
  for (long k = M; k > K; --k) {
    const long double x = k - 0.5L;
    s += 2.0L / (x * x);
  }
  // sum_{k > M} 1/(k-1/2)^2 = 1/M + O(M^-3)
  s += 2.0L / M;
  return omega / (M_PIl * M_PIl) * s;
}

QuadratureRule rule_for(const BandLimited& f) { return build_quadrature(f.manifold(), 2 * f.degree()); }

}  // namespace

TEST_CASE("finite formula on e^{it} with n = 1") {
  // nodes pi/2 and 3pi/2, csc^2(t_k/2) = 2 for both
  CHECK(1 / std::pow(std::sin(kPi / 4), 2) == doctest::Approx(2.0));
  CHECK(1 / std::pow(std::sin(3 * kPi / 4), 2) == doctest::Approx(2.0));
  CHECK(coeff_gap(riesz_finite_circle(circle_exponential(1), 1), cplx(0, 1) * circle_exponential(1)) < 1e-15);
}

TEST_CASE("csc^2 node sum equals 4n^2") {
  for (int n = 1; n <= 64; ++n) {
    long double s = 0;
    for (int k = 1; k <= 2 * n; ++k) s += 1.0L / std::pow(std::sin((2 * k - 1) * M_PIl / (4 * n)), 2);
    CHECK(std::abs(static_cast<double>(s) - 4.0 * n * n) < 1e-10 * n * n);
  }
}

TEST_CASE("finite formula examples") {
  for (int n : {1, 2, 7, 64}) {
    // weights have absolute sum n
    const BandLimited c = constant_function(kS1, 3.0);
    CHECK(l2_norm(riesz_finite_circle(c, n)) < 64 * n * 2.2e-16 * l2_norm(c));
    CHECK(rel_l2(riesz_finite_circle(sine(n), n), double(n) * cosine(n)) < 1e-13);
  }
  CHECK_THROWS_AS(riesz_finite_circle(circle_exponential(5), 4), std::invalid_argument);
  CHECK_THROWS(riesz_finite_circle(spherical_harmonic(1, 0), 2));
}

TEST_CASE("property: finite formula equals the derivative below its band") {
  for (int n = 1; n <= 64; n += 3)
    for (int deg : {n, std::max(1, n / 2)}) {
      const BandLimited t = random_bandlimited(kS1, deg, 7000 + n).resized(n);
      const BandLimited d = apply_generator(t, GeneratorId{1});
      CHECK(rel_l2(riesz_finite_circle(t, n), d, 1e-300) < 1e-10);
    }
}

TEST_CASE("tail bound") {
  for (int K : {1, 3, 10, 100, 1000, 10000}) {
    const long double oracle = tail_oracle(1.0, K);
    CHECK(std::abs(tail_bound({1.0, K}) - static_cast<double>(oracle)) < 1e-10 * static_cast<double>(oracle));
  }
  // complement of the partial sum, in extended precision where it is stable
  for (int K : {1, 2, 5}) {
    long double partial = 0;
    for (int k = -K + 1; k <= K; ++k) partial += 1.0L / ((k - 0.5L) * (k - 0.5L));
    const long double complement = 2.5L - 2.5L / (M_PIl * M_PIl) * partial;
    CHECK(tail_bound({2.5, K}) == doctest::Approx(static_cast<double>(complement)).epsilon(1e-14));
  }
  double prev = INFINITY;
  for (int K = 1; K < 200000; K = K * 3 + 1) {
    const double t = tail_bound({3.0, K});
    CHECK(std::isfinite(t));
    CHECK(t < prev);
    CHECK(tail_bound({6.0, K}) == doctest::Approx(2 * t).epsilon(1e-15));
    prev = t;
  }
  CHECK_THROWS(tail_bound({1.0, 0}));
  CHECK_THROWS(tail_bound({0.0, 5}));
}

TEST_CASE("default K") {
  const int K = default_K(1.0);
  CHECK(K == 202643);
  CHECK(tail_bound({1.0, K}) <= 1e-6);
  CHECK(tail_bound({1.0, K - 1}) > 1e-6);
  CHECK(default_K(7.0) == K);
  CHECK(default_K(1.0, 1e-3) < 1000);
}

TEST_CASE("the multiplier at mu = omega is omega minus the tail") {
  for (double omega : {1.0, 4.0, 9.5})
    for (int K : {1, 10, 1000}) {
      const RieszConfig cfg{omega, K};
      const cplx m = series_multiplier(omega, cfg);
      CHECK(std::abs(m.real()) < 1e-15 * omega);
      CHECK(m.imag() == doctest::Approx(omega - tail_bound(cfg)).epsilon(1e-12));
      CHECK(std::abs(series_multiplier(-omega, cfg) + m) < 1e-15 * omega);
      CHECK(series_multiplier(0.0, cfg) == cplx(0.0));
    }
}

TEST_CASE("series examples") {
  const RieszConfig big{1.0, 10000};
  const BandLimited y10 = spherical_harmonic(1, 0);
  CHECK(l2_norm(riesz_series(y10, GeneratorId{3}, big, rule_for(y10))) <= tail_bound(big));

  const BandLimited y22 = spherical_harmonic(2, 2);
  const RieszConfig w2{2.0, 1000};
  const BandLimited r = riesz_series(y22, GeneratorId{3}, w2, rule_for(y22));
  CHECK(l2_norm(r - cplx(0, 2) * y22) <= tail_bound(w2));

  for (int n : {1, 4, 16}) {
    const BandLimited f = sine(n);
    const BandLimited exact = double(n) * cosine(n);
    const RieszConfig c4{double(n), 10000};
    const double err = l2_norm(riesz_series(f, GeneratorId{1}, c4, rule_for(f)) - exact);
    CHECK(err <= tail_bound(c4) * l2_norm(f) * (1 + 1e-12));
    // the whole error sits on the band edge: exactly tail/omega relative
    CHECK(err / l2_norm(exact) == doctest::Approx(tail_bound(c4) / n).epsilon(1e-8));
    // the default half-width buys 1e-6
    const RieszConfig fine{double(n), default_K(n)};
    CHECK(rel_l2(riesz_series(f, GeneratorId{1}, fine, rule_for(f)), exact) <= 1e-6);
  }
}

TEST_CASE("series on sphere harmonics stays within the tail bound") {
  for (int l : {1, 2, 4, 8})
    for (int m : {0, l / 2, -l})
      for (int axis = 1; axis <= 3; ++axis)
        for (int K : {1, 100, 10000}) {
          const BandLimited y = spherical_harmonic(l, m);
          const RieszConfig cfg{double(l), K};
          const BandLimited err = riesz_series(y, GeneratorId{axis}, cfg, rule_for(y)) - apply_generator(y, GeneratorId{axis});
          CHECK(l2_norm(err) <= tail_bound(cfg) * (1 + 1e-9) + 1e-13);
        }
}

TEST_CASE("direct and spectral accumulation agree") {
  const BandLimited f = random_bandlimited(kS2, 4, 81, true);
  const RieszConfig cfg{4.0, 60};
  for (int axis = 1; axis <= 3; ++axis) {
    const BandLimited a = riesz_series(f, GeneratorId{axis}, cfg, rule_for(f), SeriesMode::Spectral);
    const BandLimited b = riesz_series(f, GeneratorId{axis}, cfg, rule_for(f), SeriesMode::Direct);
    CHECK(rel_l2(a, b) < 1e-12);
  }
}

TEST_CASE("admissibility and rule preconditions") {
  const BandLimited y = spherical_harmonic(5, 1);
  CHECK_THROWS_AS(riesz_series(y, GeneratorId{1}, {4.0, 10}, rule_for(y)), std::invalid_argument);
  CHECK_THROWS_AS(riesz_series(y, GeneratorId{1}, {5.0, 10}, build_quadrature(kS2, 6)), std::invalid_argument);
  CHECK_THROWS(riesz_series(y, GeneratorId{4}, {5.0, 10}, rule_for(y)));
  // padding with zero coefficients does not change admissibility
  const BandLimited padded = y.resized(9);
  CHECK_NOTHROW(riesz_series(padded, GeneratorId{3}, {5.0, 10}, rule_for(padded)));
}

TEST_CASE("compositions") {
  const RieszConfig cfg{5.0, 10000};
  for (int m : {-5, -2, 0, 3}) {
    const BandLimited y = spherical_harmonic(5, m);
    const int idx33[2] = {3, 3};
    const BandLimited r = riesz_compose(y, idx33, cfg, rule_for(y));
    const double bound = 2 * cfg.omega * tail_bound(cfg);
    CHECK(l2_norm(r - double(-m * m) * y) <= bound);
  }
  const BandLimited f = random_bandlimited(kS2, 5, 82);
  const int one[1] = {2};
  CHECK(coeff_gap(riesz_compose(f, one, cfg, rule_for(f)), riesz_series(f, GeneratorId{2}, cfg, rule_for(f))) == 0.0);
  CHECK(coeff_gap(riesz_compose(f, {}, cfg, rule_for(f)), f) == 0.0);

  const int d12[2] = {1, 2}, d21[2] = {2, 1};
  const BandLimited bracket = riesz_compose(f, d12, cfg, rule_for(f)) - riesz_compose(f, d21, cfg, rule_for(f));
  const BandLimited r3 = riesz_series(f, GeneratorId{3}, cfg, rule_for(f));
  CHECK(l2_norm(bracket + r3) <= (2 * 2 * cfg.omega + 1) * tail_bound(cfg) * l2_norm(f));
}

TEST_CASE("Laplacian from translation series") {
  for (int l = 0; l <= 8; ++l)
    for (int m : {-l, 0, l / 2}) {
      const BandLimited y = spherical_harmonic(l, m);
      const RieszConfig cfg{double(std::max(l, 1)), 10000};
      CHECK(rel_l2(riesz_laplacian(y, cfg, rule_for(y)), laplacian_exact(y), 1e-300) <= 1e-4 * (l > 0) + 1e-14 * (l == 0));
    }
  const BandLimited c = constant_function(kS2, 2.0);
  CHECK(l2_norm(riesz_laplacian(c, {1.0, 100}, rule_for(c))) < 1e-14);
  for (int k : {1, 3, 8}) {
    const BandLimited e = circle_exponential(k);
    CHECK(rel_l2(riesz_laplacian(e, {double(k), 10000}, rule_for(e)), double(k * k) * e) <= 2 * tail_bound({1.0, 10000}) + 1e-12);
  }
}

TEST_CASE("property: operator norm and rotation covariance") {
  for (int trial = 0; trial < 4; ++trial) {
    const BandLimited f = random_bandlimited(kS2, 6, 600 + trial);
    const RieszConfig cfg{6.0, 1 + 37 * trial};
    for (int axis = 1; axis <= 3; ++axis) {
      const BandLimited r = riesz_series(f, GeneratorId{axis}, cfg, rule_for(f));
      CHECK(l2_norm(r) <= cfg.omega * l2_norm(f) * (1 + 1e-10));
      // rotations about the same axis commute with the series
      const GroupElement g = GroupElement::rotation(axis_rotation(axis, 0.3 + trial));
      const BandLimited a = translate(r, g);
      const BandLimited b = riesz_series(translate(f, g), GeneratorId{axis}, cfg, rule_for(f));
      CHECK(rel_l2(a, b) < 1e-11);
    }
  }
  const BandLimited t = random_bandlimited(kS1, 9, 610);
  CHECK(l2_norm(riesz_series(t, GeneratorId{1}, {9.0, 3}, rule_for(t))) <= 9.0 * l2_norm(t) * (1 + 1e-10));
}

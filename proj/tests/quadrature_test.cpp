#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "riesz/bandlimited.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/sph.hpp"
#include "support.hpp"

using namespace riesz;

namespace {

double weight_sum(const QuadratureRule& r) { return pairwise_sum(r.weights); }

cplx integrate(const QuadratureRule& rule, const std::vector<cplx>& values) {
  cplx s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) s += rule.weights[i] * values[i];
  return s;
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates monomials exactly") {
  for (int n : {1, 2, 5, 12, 33}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      long double s = 0;
      for (int i = 0; i < n; ++i) s += w[i] * std::pow(static_cast<long double>(x[i]), k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(static_cast<double>(s) - exact) < 1e-14);
    }
  }
}

TEST_CASE("rules have positive weights summing to the measure") {
  for (const ManifoldId& m : {ManifoldId::circle(), ManifoldId::torus(2), ManifoldId::sphere()})
    for (int deg : {0, 1, 7, 20}) {
      const QuadratureRule r = build_quadrature(m, deg);
      CHECK(r.exact_degree >= deg);
      CHECK(std::abs(weight_sum(r) - m.measure()) < 1e-10 * m.measure());
      for (double w : r.weights) CHECK(w > 0.0);
    }
  CHECK(weight_sum(build_quadrature(ManifoldId::sphere(), 9)) == doctest::Approx(4 * kPi).epsilon(1e-12));
  CHECK_THROWS(build_quadrature(ManifoldId::circle(), -1));
}

TEST_CASE("circle rule kills nonzero frequencies (roots of unity)") {
  for (int n : {1, 3, 8, 31}) {
    const QuadratureRule r = build_quadrature(ManifoldId::circle(), 2 * n);
    for (int k = -2 * n; k <= 2 * n; ++k) {
      // geometric sum over the N-th roots of unity: N if N | k else 0
      const int N = static_cast<int>(r.nodes.size());
      cplx s = 0;
      for (int i = 0; i < N; ++i) s += std::polar(1.0, kTwoPi * k * i / N);
      const double oracle = (k % N == 0) ? kTwoPi : 0.0;
      CHECK(std::abs(s * (kTwoPi / N) - oracle) < 1e-12);
      std::vector<cplx> v;
      for (const Point& p : r.nodes) v.push_back(std::polar(1.0, k * p[0]));
      CHECK(std::abs(integrate(r, v) - oracle) < 1e-12);
    }
  }
}

TEST_CASE("sphere rule integrates |Y_2^0|^2 to one") {
  const QuadratureRule r = build_quadrature(ManifoldId::sphere(), 4);
  std::vector<cplx> v;
  for (const Point& p : r.nodes) v.push_back(std::norm(eval(spherical_harmonic(2, 0), p)));
  CHECK(std::abs(integrate(r, v) - 1.0) < 1e-12);
}

TEST_CASE("sphere rule integrates polynomials of its degree") {
  // int x^a y^b z^c over S^2 has a closed form via Gamma functions
  auto moment = [](int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    const double ga = std::tgamma((a + 1) / 2.0), gb = std::tgamma((b + 1) / 2.0), gc = std::tgamma((c + 1) / 2.0);
    return 2.0 * ga * gb * gc / std::tgamma((a + b + c + 3) / 2.0);
  };
  const int deg = 10;
  const QuadratureRule r = build_quadrature(ManifoldId::sphere(), deg);
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c) {
        double s = 0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
          const Point& p = r.nodes[i];
          s += r.weights[i] * std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], c);
        }
        CHECK(std::abs(s - moment(a, b, c)) < 1e-13);
      }
}

TEST_CASE("normalized Legendre values match closed forms") {
  const double theta = 0.83, phi = 2.2, z = std::cos(theta), s = std::sin(theta);
  const double c = 1.0 / std::sqrt(4 * kPi);
  auto close = [](cplx a, cplx b) { return std::abs(a - b) < 1e-14; };
  CHECK(close(sph::ylm(0, 0, theta, phi), c));
  CHECK(close(sph::ylm(1, 0, theta, phi), std::sqrt(3.0) * c * z));
  CHECK(close(sph::ylm(1, 1, theta, phi), -std::sqrt(1.5) * c * s * std::polar(1.0, phi)));
  CHECK(close(sph::ylm(2, 0, theta, phi), std::sqrt(5.0) * c * 0.5 * (3 * z * z - 1)));
  CHECK(close(sph::ylm(2, 1, theta, phi), -std::sqrt(7.5) * c * s * z * std::polar(1.0, phi)));
  CHECK(close(sph::ylm(2, 2, theta, phi), 0.25 * std::sqrt(7.5) * c * 2 * s * s * std::polar(1.0, 2 * phi)));
  CHECK(close(sph::ylm(2, -1, theta, phi), -std::conj(sph::ylm(2, 1, theta, phi))));
  // Y_l^l(pi/2) grows like sqrt(l) only: no overflow or underflow at l = 64
  const cplx big = sph::ylm(64, 64, kPi / 2, 0.0);
  CHECK(std::isfinite(big.real()));
  CHECK(std::abs(big) > 0.1);
}

TEST_CASE("Legendre table with inactive columns agrees") {
  sph::Legendre full(12), part(12);
  full.compute(0.3, std::sqrt(1 - 0.09));
  std::vector<char> active(13, 0);
  active[3] = active[7] = 1;
  part.compute(0.3, std::sqrt(1 - 0.09), active);
  for (int m : {3, 7})
    for (int l = m; l <= 12; ++l) CHECK(part(l, m) == full(l, m));
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(pairwise_sum(nullptr, 0) == 0.0);
}

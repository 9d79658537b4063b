#include "riesz/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs at least one node");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(n - 1 - i);
    nodes[lo] = x;
    nodes[hi] = -x;
    weights[lo] = w;
    weights[hi] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

QuadratureRule build_quadrature(const ManifoldId& manifold, int degree) {
  if (degree < 0) throw std::invalid_argument("quadrature degree must be nonnegative");
  QuadratureRule rule;
  rule.manifold = manifold;
  rule.exact_degree = degree;
  const int n = degree + 1;
  rule.n_angle = n;
  const double h = kTwoPi / n;

  switch (manifold.kind) {
    case ManifoldKind::Circle:
      for (int i = 0; i < n; ++i) {
        rule.nodes.push_back(Point::circle(i * h));
        rule.weights.push_back(h);
      }
      break;
    case ManifoldKind::Torus: {
      const int m = manifold.torus_dim;
      std::size_t total = 1;
      for (int d = 0; d < m; ++d) total *= static_cast<std::size_t>(n);
      std::array<double, 4> a{};
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int d = m - 1; d >= 0; --d) {
          a[static_cast<std::size_t>(d)] = static_cast<double>(rem % static_cast<std::size_t>(n)) * h;
          rem /= static_cast<std::size_t>(n);
        }
        rule.nodes.push_back(Point::torus(std::span<const double>(a.data(), static_cast<std::size_t>(m))));
        rule.weights.push_back(std::pow(h, m));
      }
      break;
    }
    case ManifoldKind::Sphere2: {
      const int rings = (degree + 2 + 1) / 2;  // ceil((degree + 2) / 2)
      gauss_legendre(rings, rule.ring_cos, rule.ring_weight);
      for (int r = 0; r < rings; ++r) {
        const double z = rule.ring_cos[static_cast<std::size_t>(r)];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < n; ++j) {
          const double phi = j * h;
          rule.nodes.push_back(Point::sphere(s * std::cos(phi), s * std::sin(phi), z));
          rule.weights.push_back(rule.ring_weight[static_cast<std::size_t>(r)] * h);
        }
      }
      break;
    }
  }
  return rule;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace riesz

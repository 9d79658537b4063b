#pragma once

#include <vector>

#include "riesz/geometry.hpp"

namespace riesz {

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// A positive-weight rule for the invariant measure dx, exact on band-limited
/// functions of degree <= exact_degree.
///
/// Every rule is a tensor grid: equispaced angles on S^1 / T^m, and on S^2
/// Gauss-Legendre rings in cos(theta) times an equispaced longitude grid.
/// Nodes are stored ring-major (ring index slow, longitude fast) so grid-aware
/// code can use the ring structure.
struct QuadratureRule {
  ManifoldId manifold;
  int exact_degree = 0;
  std::vector<Point> nodes;
  std::vector<double> weights;

  // grid description
  int n_angle = 0;                  // equispaced points per circle factor / longitudes on S^2
  std::vector<double> ring_cos;     // S^2 only
  std::vector<double> ring_weight;  // S^2 only, sums to 2
};

/// Circle: degree+1 equispaced nodes; torus: tensor product; sphere:
/// ceil((degree+2)/2) Gauss-Legendre rings times degree+1 longitudes.
QuadratureRule build_quadrature(const ManifoldId& manifold, int degree);

/// Fixed-order pairwise (tree) summation.
double pairwise_sum(const double* v, std::size_t n);
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

}  // namespace riesz

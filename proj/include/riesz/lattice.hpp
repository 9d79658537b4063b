#pragma once

#include <vector>

#include "json.hpp"
#include "riesz/bandlimited.hpp"
#include "riesz/geometry.hpp"
#include "riesz/norms.hpp"

namespace riesz {

/// Centers x_i with pairwise distance > 2r whose 2r-balls cover the manifold,
/// together with motions g_i, g_i . o = x_i.
struct Lattice {
  ManifoldId manifold;
  double r = 0.0;
  std::vector<Point> centers;
  std::vector<GroupElement> group_elements;
  /// Max number of centers within 4r of a probe, as measured at build time.
  int verified_multiplicity = 0;
};

struct LatticeCheck {
  bool disjoint = false;
  bool cover = false;
  int multiplicity = 0;
  double min_separation = 0.0;   // smallest pairwise center distance
  double max_probe_gap = 0.0;    // largest probe-to-nearest-center distance
};

/// Requires 0 < r < pi/4 (and a torus of dimension <= 3).
///  - S^1: ceil(pi/(2r)) equispaced centers starting at angle 0;
///  - T^m: the tensor grid with ceil(pi sqrt(m)/(2r)) points per axis;
///  - S^2: greedy 2r-separated selection over a Fibonacci candidate stream
///    (about 100 candidates per r-cap), starting from the north pole, then
///    closed by adding uncovered circumcenters of nearby center triples.
Lattice build_lattice(const ManifoldId& manifold, double r);

/// Separation is checked over all pairs; cover and multiplicity over a
/// deterministic probe set (an equispaced or Fibonacci set of `probes` points
/// plus all centers). Requires probes >= 1000.
LatticeCheck verify_lattice(const Lattice& lat, int probes = 20000);

enum class ActionOrder {
  /// f(g . x_i)
  MotionFirst,
  /// f(g_i g . o)
  LatticeFirst,
};

/// r^{m/p} (sum_i |f(g . x_i)|^p)^{1/p}; max_i |f(g . x_i)| for p = inf.
double sampled_pnorm(const BandLimited& f, const Lattice& lat, NormParams p, const GroupElement& g,
                     ActionOrder order = ActionOrder::MotionFirst);

/// Max of sampled_pnorm over a deterministic set of motions: group_grid_size
/// equispaced shifts per axis on S^1 / T^m; on S^2 a ZYZ Euler grid of
/// group_grid_size^3 rotations plus 64 pseudo-random rotations (fixed seed).
/// The sets are nested under doubling of group_grid_size.
double sup_sampled_pnorm(const BandLimited& f, const Lattice& lat, NormParams p, int group_grid_size = 8);

/// The motions used by sup_sampled_pnorm.
std::vector<GroupElement> group_sample(const ManifoldId& manifold, int group_grid_size);

nlohmann::ordered_json to_json(const Lattice& lat);
Lattice lattice_from_json(const nlohmann::ordered_json& j);

}  // namespace riesz

#pragma once

#include <span>

#include "riesz/bandlimited.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

/// Translation-series parameters: band limit omega and half-width K (terms
/// k = -K+1..K at nodes t_k = (pi/omega)(k - 1/2)).
struct RieszConfig {
  double omega = 1.0;
  int K = 1;
  void validate() const;
};

/// How the series is accumulated on S^2.
enum class SeriesMode {
  /// The series acting on the eigenfunctions of the flow is a scalar
  /// multiplier per frequency; evaluated once per frequency, with one frame
  /// change for the axes 1 and 2.
  Spectral,
  /// One translate per term, accumulated largest weight first.
  Direct,
};

/// (omega/pi^2) * sum over the omitted terms of (k - 1/2)^-2, via the trigamma
/// function.
double tail_bound(const RieszConfig& cfg);

/// Smallest K with tail_bound <= rtol * omega.
int default_K(double omega, double rtol = 1e-6);

/// Finite interpolation formula on S^1 with 2n nodes t_k = (2k-1)pi/(2n):
/// (1/(4n)) sum_k (-1)^{k+1} csc^2(t_k/2) T(t + t_k). Equals T' for degree <= n.
BandLimited riesz_finite_circle(const BandLimited& T, int n);

/// The scalar the truncated series multiplies e^{i mu t} by along one flow.
cplx series_multiplier(double mu, const RieszConfig& cfg);

/// Truncated translation series along generator j. `rule` is used for the
/// S^2 translations and must integrate degree 2 * f.degree() exactly.
BandLimited riesz_series(const BandLimited& f, GeneratorId j, const RieszConfig& cfg, const QuadratureRule& rule,
                         SeriesMode mode = SeriesMode::Spectral);

/// R_{i1} R_{i2} ... R_{ik} f (the last index acts first); empty -> f.
BandLimited riesz_compose(const BandLimited& f, std::span<const int> indices, const RieszConfig& cfg,
                          const QuadratureRule& rule, SeriesMode mode = SeriesMode::Spectral);

/// -sum_j R_j (R_j f).
BandLimited riesz_laplacian(const BandLimited& f, const RieszConfig& cfg, const QuadratureRule& rule,
                            SeriesMode mode = SeriesMode::Spectral);

}  // namespace riesz

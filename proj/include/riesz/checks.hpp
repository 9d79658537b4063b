#pragma once

#include <span>
#include <vector>

#include "riesz/bandlimited.hpp"
#include "riesz/lattice.hpp"
#include "riesz/norms.hpp"
#include "riesz/report.hpp"
#include "riesz/riesz.hpp"

namespace riesz {

using Json = nlohmann::ordered_json;

/// ||D_{i1}..D_{ik} f||_p <= n^k ||f||_p with exact generators.
CheckReport bernstein_check(const BandLimited& f, int n, NormParams p, std::span<const int> indices, Json context = {});

/// S^1: ||T^(k)||_q <= 3 n^{k+1/p-1/q} ||T||_p (asserted).
/// S^2 / T^m: ratio against n^{k+m/p-m/q} ||f||_p, recorded only.
CheckReport bn_check(const BandLimited& f, int n, NormParams p, NormParams q, std::span<const int> indices,
                     Json context = {});

/// max over offsets u of (h sum_k |T(kh - u)|^p)^{1/p}, h = 2pi/N; the max is
/// taken over 8N offsets followed by a local polish.
double shifted_sample_norm(const BandLimited& T, int N, NormParams p);

/// ||T||_p <= sampled <= (1 + n h) ||T||_p. lhs/rhs hold the right-hand
/// inequality; the left one is asserted only for N >= 2n + 1.
CheckReport nikolskii_sampling_check(const BandLimited& T, int n, int N, NormParams p, Json context = {});

/// Left: ||f||_q <= 4^m sup_g sampled_q (asserted). The constant-free ratio
/// and the right-hand constant sup_g sampled_p / ((1 + (r omega)^l) ||f||_p)
/// are recorded in `extra` (keys "constant_free_ratio", "right_constant").
CheckReport manifold_chain_check(const BandLimited& f, const Lattice& lat, double omega, NormParams p, NormParams q,
                                 int l, int group_grid_size = 8, Json context = {});

/// ||f||_q / (omega^{m/p - m/q} ||f||_p), recorded.
CheckReport nikolskii_pq_check(const BandLimited& f, double omega, NormParams p, NormParams q, Json context = {});

/// ||L^{k/2} f||_2^2 from the spectrum against the sum over all d^k index
/// tuples of ||D_{i1}..D_{ik} f||_2^2. k in {1, 2}.
CheckReport parseval_check(const BandLimited& f, int k, Json context = {});

/// Over the spherical-harmonic basis of degree <= degree_cap:
///  (a) l(l+1) <= d w^2 where w is the largest ratio ||D_j Y||_2 / ||Y||_2;
///  (b) ||L^k phi||_p <= (d omega)^{2k} ||phi||_p for k in {1, 2},
///      p in {1, 2, inf}, phi in E_omega (eigenvalues <= omega): every basis
///      function there plus seeded random combinations.
/// lhs is the largest ratio encountered, rhs = 1.
CheckReport embedding_check(double omega, int d, int degree_cap = 20, std::uint64_t seed = 1, Json context = {});

/// ||D_j f||_p <= eps ||D_j^2 f||_p + (2/eps) ||f||_p.
CheckReport landau_check(const BandLimited& f, GeneratorId j, double eps, NormParams p, Json context = {});

/// Least-squares slope of log(||F_n^(k)||_q / ||F_n||_p) against log n for the
/// Fejer kernels; passes when within 0.1 of k + 1/p - 1/q.
CheckReport fejer_exponent_fit(NormParams p, NormParams q, int k, std::span<const int> n_values, Json context = {});

/// Finite circle formula against T': relative L^2 error <= 1e-10.
CheckReport riesz_finite_check(const BandLimited& T, int n, Json context = {});

/// Truncated series against D_j f: ||R f - D_j f||_2 <= tail_bound ||f||_2.
CheckReport riesz_exactness_check(const BandLimited& f, GeneratorId j, const RieszConfig& cfg,
                                  SeriesMode mode = SeriesMode::Spectral, Json context = {});

/// L f against -sum_j D_j^2 f (exact operators), relative 1e-10.
CheckReport laplacian_identity_check(const BandLimited& f, Json context = {});

/// -sum_j R_j R_j f against L f: relative L^2 error <= rtol.
CheckReport riesz_laplacian_check(const BandLimited& f, const RieszConfig& cfg, double rtol = 1e-4,
                                  Json context = {});

/// [D_1, D_2] f = -D_3 f on S^2 (exact operators).
CheckReport commutator_check(const BandLimited& f, Json context = {});

/// Lattice separation, cover and (on S^2) multiplicity <= bound.
CheckReport lattice_check(const Lattice& lat, int probes, int multiplicity_bound, Json context = {});

/// Default generator index list of length k: all 1 on S^1, cycling 1..d otherwise.
std::vector<int> default_indices(const ManifoldId& manifold, int k);

}  // namespace riesz

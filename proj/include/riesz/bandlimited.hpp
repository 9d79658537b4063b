#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "riesz/geometry.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

using cplx = std::complex<double>;

/// Number of stored coefficients for a given manifold and degree:
/// 2n+1 on S^1, (2n+1)^m on T^m (max-norm band), (n+1)^2 on S^2.
std::size_t coeff_count(const ManifoldId& manifold, int degree);

/// A band-limited function stored by its coefficients.
///
/// Layout:
///  - S^1: c_k for k = -n..n at position k + n, basis e^{ikt};
///  - T^m: c_k for the multi-index k in [-n, n]^m, row-major with the first
///    coordinate slowest, basis e^{i k.t};
///  - S^2: c_{l,m} for 0 <= l <= n, |m| <= l at position l^2 + l + m, basis the
///    orthonormal complex spherical harmonics with Condon-Shortley phase.
///
/// The circle/torus basis is not normalized: ||e^{ikt}||_2^2 = (2pi)^m.
class BandLimited {
 public:
  BandLimited() = default;
  BandLimited(const ManifoldId& manifold, int degree);
  BandLimited(const ManifoldId& manifold, int degree, std::vector<cplx> coeffs);

  const ManifoldId& manifold() const { return manifold_; }
  int degree() const { return degree_; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  cplx& circle(int k);
  cplx circle(int k) const;
  cplx& sphere(int l, int m);
  cplx sphere(int l, int m) const;
  cplx& torus(std::span<const int> k);
  cplx torus(std::span<const int> k) const;

  /// Set when the function is real valued; the conjugate-symmetry relations
  /// are checked (within 1e-12) when the flag is set.
  bool real_valued() const { return real_; }
  void mark_real(bool real = true);
  /// Max deviation from the conjugate-symmetry relations of a real function.
  double real_symmetry_defect() const;

  /// Same function with coefficient storage for another degree (truncating
  /// when the new degree is smaller).
  BandLimited resized(int degree) const;
  /// Smallest degree carrying a coefficient with |c| > tol.
  int effective_degree(double tol = 0.0) const;

  BandLimited& operator+=(const BandLimited& o);
  BandLimited& operator-=(const BandLimited& o);
  BandLimited& operator*=(cplx s);
  friend BandLimited operator+(BandLimited a, const BandLimited& b) { return a += b; }
  friend BandLimited operator-(BandLimited a, const BandLimited& b) { return a -= b; }
  friend BandLimited operator*(cplx s, BandLimited a) { return a *= s; }

 private:
  void check_compatible(const BandLimited& o) const;

  ManifoldId manifold_{};
  int degree_ = 0;
  std::vector<cplx> coeffs_ = std::vector<cplx>(1);
  bool real_ = false;
};

// -- construction -----------------------------------------------------------

BandLimited constant_function(const ManifoldId& manifold, cplx value);
/// e^{ikt} on the circle.
BandLimited circle_exponential(int k, int degree = -1);
/// Y_l^m on the sphere (stored with degree max(l, degree)).
BandLimited spherical_harmonic(int l, int m, int degree = -1);
/// The Fejer kernel in the normalization (1/(n+1)) sin^2((n+1)t/2) / (2 sin^2(t/2)),
/// i.e. c_k = (1 - |k|/(n+1)) / 2.
BandLimited fejer_kernel(int n);
/// Zonal reproducing kernel sum_{l<=n} (2l+1)/(4pi) P_l(x . e_3) on S^2.
BandLimited zonal_kernel(int n);

/// Coefficients i.i.d. standard Gaussian (real and imaginary parts) from a
/// seeded generator; with `real` set the result is symmetrized to a real
/// valued function.
BandLimited random_bandlimited(const ManifoldId& manifold, int degree, std::uint64_t seed, bool real = false);

/// x_1^a x_2^b x_3^c with a complex coefficient.
struct Monomial {
  int a = 0, b = 0, c = 0;
  cplx coeff{1.0, 0.0};
  int total_degree() const { return a + b + c; }
};

/// Every monomial of total degree <= n with seeded Gaussian coefficients.
std::vector<Monomial> random_polynomial(int n, std::uint64_t seed);

/// Spherical-harmonic expansion of the restriction of an ambient polynomial to
/// the unit sphere. Throws if a monomial exceeds degree n.
BandLimited restrict_polynomial(std::span<const Monomial> poly, int n);

// -- synthesis / analysis ---------------------------------------------------

cplx eval(const BandLimited& f, const Point& x);
std::vector<cplx> eval_many(const BandLimited& f, std::span<const Point> xs);
/// Values at the rule nodes (uses the grid structure).
std::vector<cplx> eval_on_rule(const BandLimited& f, const QuadratureRule& rule);
/// Values on the tensor grid (cos theta_i, sin theta_i) x phi_j of S^2,
/// theta-major.
std::vector<cplx> eval_sphere_grid(const BandLimited& f, std::span<const double> cos_theta,
                                   std::span<const double> sin_theta, std::span<const double> phi);

/// Coefficients from samples at the rule nodes. Refuses rules whose
/// exact_degree is below 2 * degree.
BandLimited project(std::span<const cplx> samples, const QuadratureRule& rule, int degree);

// -- operators --------------------------------------------------------------

/// Coefficients of x -> f(g . x). Exact phase multiplication on S^1 / T^m; on
/// S^2 evaluation at rotated rule nodes followed by projection.
BandLimited translate(const BandLimited& f, const GroupElement& g, const QuadratureRule& rule);
BandLimited translate(const BandLimited& f, const GroupElement& g);

/// Exact D_j f in coefficient space.
BandLimited apply_generator(const BandLimited& f, GeneratorId j);
/// D_{i1} D_{i2} ... D_{ik} f (the last index acts first).
BandLimited apply_generators(const BandLimited& f, std::span<const int> indices);
/// L f with -L = D_1^2 + ... + D_d^2: eigenvalue k^2 / |k|^2 / l(l+1).
BandLimited laplacian_exact(const BandLimited& f);
/// L^k f.
BandLimited laplacian_power(const BandLimited& f, int k);

/// ||f||_2 from the coefficients (Parseval).
double l2_norm(const BandLimited& f);

struct SpectrumBlock {
  double lambda = 0.0;
  double norm = 0.0;
};

/// L^2 norms of the eigenspace components of f, eigenvalues increasing; only
/// blocks with a nonzero coefficient are listed.
struct SpectrumView {
  std::vector<SpectrumBlock> blocks;
  double max_lambda(double tol = 1e-12) const;
};

SpectrumView spectrum(const BandLimited& f);

// -- serialization ----------------------------------------------------------

nlohmann::ordered_json to_json(const BandLimited& f);
BandLimited bandlimited_from_json(const nlohmann::ordered_json& j);

}  // namespace riesz

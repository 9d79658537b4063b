#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace riesz::sph {

using cplx = std::complex<double>;

/// Row-major (l, m) position of Y_l^m, m = -l..l.
constexpr std::size_t lm_index(int l, int m) { return static_cast<std::size_t>(l * l + l + m); }
constexpr std::size_t lm_count(int degree) { return static_cast<std::size_t>((degree + 1) * (degree + 1)); }

/// Fully normalized associated Legendre values P(l, m) for 0 <= m <= l <= degree
/// with Condon-Shortley phase, scaled so that Y_l^m = P(l, m) e^{i m phi} is
/// orthonormal on S^2. Computed by the three-term recurrence in l, no
/// factorials involved.
class Legendre {
 public:
  explicit Legendre(int degree);

  /// Fill the table for cos(theta) = z, sin(theta) = s >= 0.
  void compute(double z, double s);
  /// Only columns m with active[m] set are filled (the diagonal chain is
  /// always advanced).
  void compute(double z, double s, const std::vector<char>& active);

  double operator()(int l, int m) const { return values_[tri(l, m)]; }
  int degree() const { return degree_; }

 private:
  static std::size_t tri(int l, int m) { return static_cast<std::size_t>(l * (l + 1) / 2 + m); }
  int degree_;
  std::vector<double> values_;
  std::vector<double> a_, b_;  // recurrence coefficients
};

/// Y_l^m at colatitude theta, longitude phi (orthonormal, Condon-Shortley).
cplx ylm(int l, int m, double theta, double phi);

}  // namespace riesz::sph

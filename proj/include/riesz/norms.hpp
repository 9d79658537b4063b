#pragma once

#include <limits>
#include <string>

#include "riesz/bandlimited.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

/// Exponent p in [1, inf]; infinity is stored as +inf.
class NormParams {
 public:
  NormParams() = default;
  explicit NormParams(double p);
  static NormParams inf() { return NormParams(std::numeric_limits<double>::infinity()); }

  double p() const { return p_; }
  bool is_inf() const { return p_ == std::numeric_limits<double>::infinity(); }
  /// p as an integer when it is an even integer, else 0.
  int even_integer() const;
  /// 1/p, zero for p = inf.
  double inverse() const { return is_inf() ? 0.0 : 1.0 / p_; }
  /// "1", "2", "2.5", "inf".
  std::string label() const;
  static NormParams parse(const std::string& text);

 private:
  double p_ = 2.0;
};

/// (sum_i w_i |f(x_i)|^p)^{1/p} in pairwise summation order; p = inf delegates
/// to sup_norm.
double lp_norm(const BandLimited& f, NormParams p, const QuadratureRule& rule);

/// max |f| over a grid of refinement * (degree + 1) points per dimension,
/// followed by a local 1-D Brent polish around the best grid maxima. A lower
/// bound for the true sup.
double sup_norm(const BandLimited& f, int refinement = 16);

struct NormEstimate {
  double value = 0.0;
  /// Relative difference between two independent evaluations (0 when exact).
  double discrepancy = 0.0;
  std::string method;
};

/// ||f||_p with the rule picked per exponent:
///  - p = 2: Parseval;
///  - even p = 2k: a rule of exact degree 2k * degree (exact);
///  - other finite p on S^1: adaptive Gauss-Kronrod on 2 * degree + 2 panels;
///  - other finite p on S^2 / T^m: rules of exact degree 4 * degree + 8 and
///    twice that; the finer value is returned with the gap as discrepancy;
///  - p = inf: sup_norm.
NormEstimate norm_estimate(const BandLimited& f, NormParams p);
inline double norm(const BandLimited& f, NormParams p) { return norm_estimate(f, p).value; }

}  // namespace riesz

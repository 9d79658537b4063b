#pragma once

#include <cmath>
#include <random>

#include "riesz/bandlimited.hpp"

namespace testing_support {

using riesz::BandLimited;

/// ||a - b||_2 / max(||b||_2, floor)
inline double rel_l2(const BandLimited& a, const BandLimited& b, double floor = 1e-300) {
  return riesz::l2_norm(a - b) / std::max(riesz::l2_norm(b), floor);
}

/// Max coefficient distance after padding both to a common degree.
inline double coeff_gap(const BandLimited& a, const BandLimited& b) {
  const int deg = std::max(a.degree(), b.degree());
  const BandLimited x = a.resized(deg), y = b.resized(deg);
  double gap = 0.0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) gap = std::max(gap, std::abs(x.coeffs()[i] - y.coeffs()[i]));
  return gap;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

}  // namespace testing_support

#include "riesz/sph.hpp"

#include <cmath>
#include <stdexcept>

#include "riesz/geometry.hpp"

namespace riesz::sph {

Legendre::Legendre(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("Legendre degree must be nonnegative");
  const std::size_t n = tri(degree, degree) + 1;
  values_.assign(n, 0.0);
  a_.assign(n, 0.0);
  b_.assign(n, 0.0);
  for (int m = 0; m <= degree; ++m) {
    for (int l = m + 2; l <= degree; ++l) {
      const double l2 = static_cast<double>(l) * l, m2 = static_cast<double>(m) * m;
      const double lm1 = static_cast<double>(l - 1);
      a_[tri(l, m)] = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
      b_[tri(l, m)] = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
    }
  }
}

void Legendre::compute(double z, double s) {
  static thread_local std::vector<char> all;
  all.assign(static_cast<std::size_t>(degree_) + 1, 1);
  compute(z, s, all);
}

void Legendre::compute(double z, double s, const std::vector<char>& active) {
  double pmm = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 0; m <= degree_; ++m) {
    if (m > 0) pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    if (!active[static_cast<std::size_t>(m)]) continue;
    values_[tri(m, m)] = pmm;
    if (m + 1 > degree_) continue;
    double p_lm2 = pmm;
    double p_lm1 = std::sqrt(2.0 * m + 3.0) * z * pmm;
    values_[tri(m + 1, m)] = p_lm1;
    for (int l = m + 2; l <= degree_; ++l) {
      const std::size_t t = tri(l, m);
      const double p = a_[t] * (z * p_lm1 - b_[t] * p_lm2);
      values_[t] = p;
      p_lm2 = p_lm1;
      p_lm1 = p;
    }
  }
}

cplx ylm(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("invalid (l, m)");
  Legendre leg(l);
  leg.compute(std::cos(theta), std::sin(theta));
  const int am = std::abs(m);
  const double p = leg(l, am);
  const cplx e = std::polar(1.0, am * phi);
  if (m >= 0) return p * e;
  return ((am % 2) ? -1.0 : 1.0) * p * std::conj(e);
}

}  // namespace riesz::sph

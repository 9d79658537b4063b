#include "riesz/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/trigamma.hpp>

namespace riesz {

namespace {

// Frame change taking e_3 to e_axis (cyclic, so generators map to generators).
Mat3 frame_for_axis(int axis) {
  const Mat3 cyc = {{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
  if (axis == 1) return cyc;
  if (axis == 2) return mat_mul(cyc, cyc);
  return mat_identity();
}

void require_admissible(const BandLimited& f, double omega) {
  double scale = 0.0;
  for (const cplx& c : f.coeffs()) scale = std::max(scale, std::abs(c));
  const int deg = f.effective_degree(1e-12 * scale);
  if (deg > omega * (1.0 + 1e-12)) {
    throw std::invalid_argument("function of degree " + std::to_string(deg) + " is not admissible for omega = " +
                                std::to_string(omega));
  }
}

// Second-order compensated summation.
struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Multiply each coefficient by the multiplier of its frequency along axis 3
// (or along the single flow on S^1 / T^m).
BandLimited apply_multiplier(const BandLimited& f, GeneratorId j, const RieszConfig& cfg) {
  const int n = f.degree();
  BandLimited out = f;
  std::vector<cplx> table(static_cast<std::size_t>(2 * n + 1));
  for (int mu = -n; mu <= n; ++mu) table[static_cast<std::size_t>(mu + n)] = series_multiplier(mu, cfg);
  auto mult = [&](int mu) { return table[static_cast<std::size_t>(mu + n)]; };
  switch (f.manifold().kind) {
    case ManifoldKind::Circle:
      for (int k = -n; k <= n; ++k) out.circle(k) *= mult(k);
      break;
    case ManifoldKind::Torus: {
      const int m = f.manifold().torus_dim;
      const auto w = static_cast<std::size_t>(2 * n + 1);
      // stride of coordinate j in the row-major layout
      std::size_t stride = 1;
      for (int d = m - 1; d > j.j - 1; --d) stride *= w;
      for (std::size_t pos = 0; pos < out.coeffs().size(); ++pos) {
        const int kj = static_cast<int>((pos / stride) % w) - n;
        out.coeffs()[pos] *= mult(kj);
      }
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= n; ++l)
        for (int m = -l; m <= l; ++m) out.sphere(l, m) *= mult(m);
      break;
  }
  return out;
}

BandLimited series_direct(const BandLimited& f, GeneratorId j, const RieszConfig& cfg, const QuadratureRule& rule) {
  const double h = kPi / cfg.omega;
  const double scale = cfg.omega / (kPi * kPi);
  // k = 1, 0, 2, -1, 3, ... : decreasing |weight|
  std::vector<std::vector<cplx>> terms;
  terms.reserve(static_cast<std::size_t>(2 * cfg.K));
  for (int i = 1; i <= cfg.K; ++i) {
    for (int k : {i, 1 - i}) {
      const double x = k - 0.5;
      const double w = ((k - 1) % 2 == 0 ? 1.0 : -1.0) * scale / (x * x);
      BandLimited moved = translate(f, flow_element(f.manifold(), j, h * x), rule);
      std::vector<cplx> c(moved.coeffs().begin(), moved.coeffs().end());
      for (cplx& v : c) v *= w;
      terms.push_back(std::move(c));
    }
  }
  // pairwise reduction in the fixed order above
  while (terms.size() > 1) {
    std::vector<std::vector<cplx>> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      std::vector<cplx> s = std::move(terms[i]);
      for (std::size_t c = 0; c < s.size(); ++c) s[c] += terms[i + 1][c];
      next.push_back(std::move(s));
    }
    if (terms.size() % 2) next.push_back(std::move(terms.back()));
    terms.swap(next);
  }
  BandLimited out(f.manifold(), f.degree(), std::move(terms.front()));
  return out;
}

}  // namespace

void RieszConfig::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be positive and finite");
  if (K < 1) throw std::invalid_argument("K must be >= 1");
}

double tail_bound(const RieszConfig& cfg) {
  cfg.validate();
  // sum_{k > K} (k - 1/2)^-2 = psi'(K + 1/2), twice for the negative side
  return 2.0 * cfg.omega / (kPi * kPi) * boost::math::trigamma(cfg.K + 0.5);
}

int default_K(double omega, double rtol) {
  if (!(rtol > 0.0)) throw std::invalid_argument("rtol must be positive");
  // tail ~ 2 omega / (pi^2 K)
  int K = std::max(1, static_cast<int>(std::floor(2.0 / (kPi * kPi * rtol))) - 2);
  while (K > 1 && tail_bound({omega, K - 1}) <= rtol * omega) --K;
  while (tail_bound({omega, K}) > rtol * omega) ++K;
  return K;
}

BandLimited riesz_finite_circle(const BandLimited& T, int n) {
  if (T.manifold().kind != ManifoldKind::Circle) throw std::invalid_argument("finite formula lives on the circle");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (T.degree() > n) {
    throw std::invalid_argument("degree " + std::to_string(T.degree()) + " exceeds n = " + std::to_string(n));
  }
  const int deg = T.degree();
  BandLimited out(T.manifold(), deg);
  std::vector<double> nodes(static_cast<std::size_t>(2 * n)), weights(nodes.size());
  for (int k = 1; k <= 2 * n; ++k) {
    const double t = (2.0 * k - 1.0) * kPi / (2.0 * n);
    const double s = std::sin(t / 2.0);
    nodes[static_cast<std::size_t>(k - 1)] = t;
    weights[static_cast<std::size_t>(k - 1)] = (k % 2 ? 1.0 : -1.0) / (4.0 * n * s * s);
  }
  for (int q = -deg; q <= deg; ++q) {
    cplx mult{};
    for (std::size_t i = 0; i < nodes.size(); ++i) mult += weights[i] * std::polar(1.0, q * nodes[i]);
    out.circle(q) = mult * T.circle(q);
  }
  if (T.real_valued()) out.mark_real();
  return out;
}

cplx series_multiplier(double mu, const RieszConfig& cfg) {
  cfg.validate();
  // pairing k with 1-k leaves 2i sum_{k>=1} (-1)^{k-1} sin(mu t_k) / (k-1/2)^2
  Neumaier acc;
  for (int k = cfg.K; k >= 1; --k) {
    const double x = k - 0.5;
    const double term = std::sin(kPi * mu * x / cfg.omega) / (x * x);
    acc.add((k - 1) % 2 == 0 ? term : -term);
  }
  return {0.0, 2.0 * cfg.omega / (kPi * kPi) * acc.value()};
}

BandLimited riesz_series(const BandLimited& f, GeneratorId j, const RieszConfig& cfg, const QuadratureRule& rule,
                         SeriesMode mode) {
  cfg.validate();
  j.validate(f.manifold());
  require_admissible(f, cfg.omega);
  if (f.manifold().is_sphere() && rule.exact_degree < 2 * f.degree()) {
    throw std::invalid_argument("rule too coarse for translations of degree " + std::to_string(f.degree()));
  }
  BandLimited out;
  if (mode == SeriesMode::Direct) {
    out = series_direct(f, j, cfg, rule);
  } else if (!f.manifold().is_sphere() || j.j == 3) {
    out = apply_multiplier(f, j, cfg);
  } else {
    const GroupElement frame = GroupElement::rotation(frame_for_axis(j.j));
    const BandLimited in_frame = translate(f, frame, rule);
    out = translate(apply_multiplier(in_frame, GeneratorId{3}, cfg), frame.inverse(), rule);
  }
  return out;
}

BandLimited riesz_compose(const BandLimited& f, std::span<const int> indices, const RieszConfig& cfg,
                          const QuadratureRule& rule, SeriesMode mode) {
  BandLimited out = f;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) out = riesz_series(out, GeneratorId{*it}, cfg, rule, mode);
  return out;
}

BandLimited riesz_laplacian(const BandLimited& f, const RieszConfig& cfg, const QuadratureRule& rule, SeriesMode mode) {
  BandLimited acc(f.manifold(), f.degree());
  for (int j = 1; j <= f.manifold().dim_d(); ++j) {
    const int twice[2] = {j, j};
    acc -= riesz_compose(f, twice, cfg, rule, mode);
  }
  return acc;
}

}  // namespace riesz

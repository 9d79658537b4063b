#include "riesz/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace riesz {

NormParams::NormParams(double p) : p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must satisfy p >= 1");
}

int NormParams::even_integer() const {
  if (is_inf() || p_ > 64.0) return 0;
  const double r = std::round(p_);
  if (r != p_ || static_cast<int>(r) % 2 != 0) return 0;
  return static_cast<int>(r);
}

std::string NormParams::label() const {
  if (is_inf()) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, p_);
  return {buf, res.ptr};
}

NormParams NormParams::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return inf();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("cannot parse norm exponent '" + text + "'");
  }
  return NormParams(v);
}

namespace {

double sum_powers(const std::vector<cplx>& values, const std::vector<double>& weights, double p) {
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double a = std::abs(values[i]);
    terms[i] = weights[i] * (p == 2.0 ? a * a : std::pow(a, p));
  }
  return pairwise_sum(terms);
}

double rule_norm(const BandLimited& f, double p, int degree) {
  const QuadratureRule rule = build_quadrature(f.manifold(), degree);
  return std::pow(sum_powers(eval_on_rule(f, rule), rule.weights, p), 1.0 / p);
}

constexpr int kBrentBits = 40;

// Maximize |f| along one coordinate around a grid point.
template <class Fn>
double polish_1d(Fn&& abs_at, double center, double half_width, double& best_arg) {
  auto neg = [&](double t) { return -abs_at(t); };
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::brent_find_minima(neg, center - half_width, center + half_width, kBrentBits, iters);
  best_arg = r.first;
  return -r.second;
}

// Indices of the largest `count` entries that are grid-local maxima along
// the flattened order (cheap candidate filter).
std::vector<std::size_t> top_indices(const std::vector<double>& v, std::size_t count) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  count = std::min(count, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                    [&](std::size_t a, std::size_t b) { return v[a] > v[b] || (v[a] == v[b] && a < b); });
  idx.resize(count);
  return idx;
}

constexpr std::size_t kPolishStarts = 3;

double sup_circle(const BandLimited& f, int refinement) {
  const int grid = refinement * (f.degree() + 1);
  const double h = kTwoPi / grid;
  std::vector<double> mags(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) mags[static_cast<std::size_t>(i)] = std::abs(eval(f, Point::circle(i * h)));
  double best = *std::max_element(mags.begin(), mags.end());
  auto abs_at = [&](double t) { return std::abs(eval(f, Point::circle(t))); };
  for (std::size_t i : top_indices(mags, kPolishStarts)) {
    double arg = 0.0;
    best = std::max(best, polish_1d(abs_at, static_cast<double>(i) * h, h, arg));
  }
  return best;
}

double sup_torus(const BandLimited& f, int refinement) {
  const int m = f.manifold().torus_dim;
  const int grid = refinement * (f.degree() + 1);
  const double h = kTwoPi / grid;
  std::size_t total = 1;
  for (int d = 0; d < m; ++d) total *= static_cast<std::size_t>(grid);
  std::vector<double> mags(total);
  std::array<double, 4> a{};
  auto point_of = [&](std::size_t idx) {
    for (int d = m - 1; d >= 0; --d) {
      a[static_cast<std::size_t>(d)] = static_cast<double>(idx % static_cast<std::size_t>(grid)) * h;
      idx /= static_cast<std::size_t>(grid);
    }
    return a;
  };
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto c = point_of(idx);
    mags[idx] = std::abs(eval(f, Point::torus(std::span<const double>(c.data(), static_cast<std::size_t>(m)))));
  }
  double best = *std::max_element(mags.begin(), mags.end());
  for (std::size_t start : top_indices(mags, kPolishStarts)) {
    auto c = point_of(start);
    // coordinate sweeps
    for (int sweep = 0; sweep < 3; ++sweep)
      for (int d = 0; d < m; ++d) {
        auto abs_at = [&](double t) {
          auto q = c;
          q[static_cast<std::size_t>(d)] = t;
          return std::abs(eval(f, Point::torus(std::span<const double>(q.data(), static_cast<std::size_t>(m)))));
        };
        double arg = 0.0;
        const double v = polish_1d(abs_at, c[static_cast<std::size_t>(d)], h / (sweep + 1), arg);
        if (v >= abs_at(c[static_cast<std::size_t>(d)])) c[static_cast<std::size_t>(d)] = arg;
        best = std::max(best, v);
      }
  }
  return best;
}

double sup_sphere(const BandLimited& f, int refinement) {
  const int grid = refinement * (f.degree() + 1);
  const int n_theta = grid + 1;  // includes both poles
  const int n_phi = 2 * grid;
  const double h = kPi / grid;
  std::vector<double> ct(static_cast<std::size_t>(n_theta)), st(ct.size()), ph(static_cast<std::size_t>(n_phi));
  for (int i = 0; i < n_theta; ++i) {
    ct[static_cast<std::size_t>(i)] = std::cos(i * h);
    st[static_cast<std::size_t>(i)] = std::sin(i * h);
  }
  st.front() = 0.0;
  st.back() = 0.0;
  for (int j = 0; j < n_phi; ++j) ph[static_cast<std::size_t>(j)] = j * h;
  const std::vector<cplx> vals = eval_sphere_grid(f, ct, st, ph);
  std::vector<double> mags(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) mags[i] = std::abs(vals[i]);
  double best = *std::max_element(mags.begin(), mags.end());
  for (std::size_t start : top_indices(mags, kPolishStarts)) {
    double theta = static_cast<double>(start / static_cast<std::size_t>(n_phi)) * h;
    double phi = static_cast<double>(start % static_cast<std::size_t>(n_phi)) * h;
    // Coordinate ascent converges slowly along diagonal ridges; sweep until
    // a full pass gains nothing.
    double last = 0.0;
    for (int sweep = 0; sweep < 40; ++sweep) {
      const double w = sweep == 0 ? h : 0.25 * h;
      auto along_theta = [&](double t) { return std::abs(eval(f, Point::sphere_polar(t, phi))); };
      double arg = theta;
      double v = polish_1d(along_theta, theta, w, arg);
      if (v >= along_theta(theta)) theta = arg;
      best = std::max(best, v);
      auto along_phi = [&](double t) { return std::abs(eval(f, Point::sphere_polar(theta, t))); };
      arg = phi;
      v = polish_1d(along_phi, phi, w, arg);
      if (v >= along_phi(phi)) phi = arg;
      best = std::max(best, v);
      if (v <= last * (1 + 1e-15)) break;
      last = v;
    }
  }
  return best;
}

// Sign changes of a real trigonometric polynomial, located on a grid and
// refined by bracketing. |f|^p has a kink at each of them.
std::vector<double> circle_sign_changes(const BandLimited& f) {
  const int grid = 16 * (f.degree() + 1);
  const double h = kTwoPi / grid;
  auto g = [&](double t) { return eval(f, Point::circle(t)).real(); };
  std::vector<double> roots;
  double a = 0.0, ga = g(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double b = i * h, gb = g(b);
    if (ga == 0.0) {
      roots.push_back(a);
    } else if (ga * gb < 0.0) {
      std::uintmax_t iters = 64;
      const auto br = boost::math::tools::toms748_solve(g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (br.first + br.second));
    }
    a = b, ga = gb;
  }
  return roots;
}

NormEstimate circle_kronrod(const BandLimited& f, double p) {
  const int panels = 2 * f.degree() + 2;
  const double width = kTwoPi / panels;
  std::vector<double> cuts;
  for (int i = 0; i <= panels; ++i) cuts.push_back(i * width);
  double scale = 0.0;
  for (const cplx& c : f.coeffs()) scale = std::max(scale, std::abs(c));
  if (f.degree() > 0 && f.real_symmetry_defect() <= 1e-12 * scale)
    for (double t : circle_sign_changes(f))
      if (t > 0.0 && t < kTwoPi) cuts.push_back(t);
  std::sort(cuts.begin(), cuts.end());
  // Zeros often coincide with panel edges; slivers between them only feed
  // rounding noise to the error estimate.
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [&](double a, double b) { return b - a < 1e-6 * width; }),
             cuts.end());
  cuts.back() = kTwoPi;

  auto integrand = [&](double t) { return std::pow(std::abs(eval(f, Point::circle(t))), p); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto panel = [&](double a, double b, double& err) { return GK::integrate(integrand, a, b, 0, 0.0, &err); };

  // Bisect until a piece is accurate relative to itself or to the whole
  // integral; pieces near zeros of f cannot reach a relative target, and the
  // Kronrod estimate itself bottoms out near 50 ulp.
  std::vector<double> coarse, errs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    coarse.push_back(cuts[i + 1] > cuts[i] ? panel(cuts[i], cuts[i + 1], err) : 0.0);
  }
  double coeff_sum = 0.0;
  for (const cplx& c : f.coeffs()) coeff_sum += std::abs(c);
  const double noise = 64.0 * (f.degree() + 1) * std::numeric_limits<double>::epsilon() * std::pow(coeff_sum, p);
  const double floor_density = std::max(1e-13 * pairwise_sum(coarse) / kTwoPi, noise);
  std::vector<double> parts;
  std::function<double(double, double, int, double&)> adapt = [&](double a, double b, int depth, double& err) {
    const double v = panel(a, b, err);
    if (err <= 1e-12 * std::abs(v) || err <= floor_density * (b - a) || depth == 0) return v;
    const double m = 0.5 * (a + b);
    double e1 = 0.0, e2 = 0.0;
    const double v1 = adapt(a, m, depth - 1, e1), v2 = adapt(m, b, depth - 1, e2);
    err = e1 + e2;
    return v1 + v2;
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    double err = 0.0;
    parts.push_back(adapt(cuts[i], cuts[i + 1], 12, err));
    errs.push_back(err);
  }
  const double integral = pairwise_sum(parts);
  NormEstimate est;
  est.value = std::pow(integral, 1.0 / p);
  est.discrepancy = integral > 0.0 ? pairwise_sum(errs) / integral / p : 0.0;
  est.method = "gauss-kronrod";
  return est;
}

}  // namespace

double lp_norm(const BandLimited& f, NormParams p, const QuadratureRule& rule) {
  if (p.is_inf()) return sup_norm(f);
  if (!(f.manifold() == rule.manifold)) throw std::invalid_argument("rule and function live on different manifolds");
  return std::pow(sum_powers(eval_on_rule(f, rule), rule.weights, p.p()), 1.0 / p.p());
}

double sup_norm(const BandLimited& f, int refinement) {
  if (refinement < 1) throw std::invalid_argument("sup-norm refinement must be >= 1");
  switch (f.manifold().kind) {
    case ManifoldKind::Circle: return sup_circle(f, refinement);
    case ManifoldKind::Torus: return sup_torus(f, refinement);
    case ManifoldKind::Sphere2: return sup_sphere(f, refinement);
  }
  return 0.0;
}

NormEstimate norm_estimate(const BandLimited& f, NormParams p) {
  NormEstimate est;
  if (p.is_inf()) {
    est.value = sup_norm(f);
    est.method = "grid+polish";
    return est;
  }
  if (p.p() == 2.0) {
    est.value = l2_norm(f);
    est.method = "parseval";
    return est;
  }
  if (const int even = p.even_integer(); even > 0) {
    est.value = rule_norm(f, p.p(), even * f.degree());
    est.method = "exact-rule";
    return est;
  }
  if (f.manifold().kind == ManifoldKind::Circle) return circle_kronrod(f, p.p());
  const int base = 4 * f.degree() + 8;
  const double coarse = rule_norm(f, p.p(), base);
  est.value = rule_norm(f, p.p(), 2 * base);
  est.discrepancy = est.value > 0.0 ? std::abs(est.value - coarse) / est.value : 0.0;
  est.method = "doubled-rule";
  return est;
}

}  // namespace riesz

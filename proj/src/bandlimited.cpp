#include "riesz/bandlimited.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "riesz/sph.hpp"

namespace riesz {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// sum_{k=-n..n} c[k+n] e^{ikt}
cplx trig_horner(const cplx* c, int n, double t) {
  const cplx z = std::polar(1.0, t);
  cplx s = c[2 * n];
  for (int j = 2 * n - 1; j >= 0; --j) s = s * z + c[j];
  return n == 0 ? s : s * std::polar(1.0, -n * t);
}

// Multi-index of a torus coefficient position.
void torus_multi_index(std::size_t pos, int n, int m, std::array<int, 4>& k) {
  const auto w = static_cast<std::size_t>(2 * n + 1);
  for (int d = m - 1; d >= 0; --d) {
    k[static_cast<std::size_t>(d)] = static_cast<int>(pos % w) - n;
    pos /= w;
  }
}

// Columns m = 0..n carrying a nonzero coefficient at +m or -m.
std::vector<char> active_columns(const BandLimited& f) {
  const int n = f.degree();
  std::vector<char> active(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 0; l <= n; ++l)
    for (int m = -l; m <= l; ++m)
      if (f.sphere(l, m) != cplx{}) active[static_cast<std::size_t>(std::abs(m))] = 1;
  return active;
}

// Column sums g_mu = sum_l c_{l,mu} P(l,|mu|) (with the (-1)^mu sign for
// negative mu), mu = -n..n stored at mu + n.
void sphere_columns(const BandLimited& f, const sph::Legendre& leg, const std::vector<char>& active,
                    std::vector<cplx>& g) {
  const int n = f.degree();
  g.assign(static_cast<std::size_t>(2 * n + 1), cplx{});
  for (int m = 0; m <= n; ++m) {
    if (!active[static_cast<std::size_t>(m)]) continue;
    cplx gp{}, gn{};
    for (int l = m; l <= n; ++l) {
      const double p = leg(l, m);
      gp += f.sphere(l, m) * p;
      if (m > 0) gn += f.sphere(l, -m) * p;
    }
    g[static_cast<std::size_t>(n + m)] = gp;
    if (m > 0) g[static_cast<std::size_t>(n - m)] = (m % 2 ? -1.0 : 1.0) * gn;
  }
}

cplx sphere_value(const BandLimited& f, sph::Legendre& leg, const std::vector<char>& active,
                  std::vector<cplx>& g, const Point& x) {
  const double s = std::hypot(x[0], x[1]);
  leg.compute(x[2], s, active);
  sphere_columns(f, leg, active, g);
  const double phi = s > 0.0 ? std::atan2(x[1], x[0]) : 0.0;
  return trig_horner(g.data(), f.degree(), phi);
}

cplx torus_value(const BandLimited& f, const Point& x) {
  const int n = f.degree(), m = f.manifold().torus_dim;
  const auto w = static_cast<std::size_t>(2 * n + 1);
  std::vector<cplx> cur(f.coeffs().begin(), f.coeffs().end());
  for (int d = m - 1; d >= 0; --d) {
    const std::size_t groups = cur.size() / w;
    std::vector<cplx> next(groups);
    for (std::size_t gi = 0; gi < groups; ++gi) next[gi] = trig_horner(cur.data() + gi * w, n, x[d]);
    cur.swap(next);
  }
  return cur[0];
}

void require_manifold(const BandLimited& f, const Point& x) {
  if (!(f.manifold() == x.manifold())) {
    throw std::invalid_argument("point on " + x.manifold().name() + " but function on " + f.manifold().name());
  }
}

}  // namespace

std::size_t coeff_count(const ManifoldId& manifold, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  switch (manifold.kind) {
    case ManifoldKind::Circle: return static_cast<std::size_t>(2 * degree + 1);
    case ManifoldKind::Torus: return ipow(static_cast<std::size_t>(2 * degree + 1), manifold.torus_dim);
    case ManifoldKind::Sphere2: return sph::lm_count(degree);
  }
  return 0;
}

BandLimited::BandLimited(const ManifoldId& manifold, int degree)
    : manifold_(manifold), degree_(degree), coeffs_(coeff_count(manifold, degree)) {}

BandLimited::BandLimited(const ManifoldId& manifold, int degree, std::vector<cplx> coeffs)
    : manifold_(manifold), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != coeff_count(manifold, degree)) {
    throw std::invalid_argument("coefficient array of size " + std::to_string(coeffs_.size()) + " does not match degree " +
                                std::to_string(degree) + " on " + manifold.name());
  }
}

cplx& BandLimited::circle(int k) {
  if (manifold_.kind != ManifoldKind::Circle || std::abs(k) > degree_) throw std::out_of_range("circle coefficient");
  return coeffs_[static_cast<std::size_t>(k + degree_)];
}
cplx BandLimited::circle(int k) const { return const_cast<BandLimited*>(this)->circle(k); }

cplx& BandLimited::sphere(int l, int m) {
  if (!manifold_.is_sphere() || l < 0 || l > degree_ || std::abs(m) > l) throw std::out_of_range("sphere coefficient");
  return coeffs_[sph::lm_index(l, m)];
}
cplx BandLimited::sphere(int l, int m) const { return const_cast<BandLimited*>(this)->sphere(l, m); }

cplx& BandLimited::torus(std::span<const int> k) {
  if (manifold_.kind != ManifoldKind::Torus || static_cast<int>(k.size()) != manifold_.torus_dim) {
    throw std::out_of_range("torus coefficient");
  }
  std::size_t pos = 0;
  for (int kd : k) {
    if (std::abs(kd) > degree_) throw std::out_of_range("torus coefficient");
    pos = pos * static_cast<std::size_t>(2 * degree_ + 1) + static_cast<std::size_t>(kd + degree_);
  }
  return coeffs_[pos];
}
cplx BandLimited::torus(std::span<const int> k) const { return const_cast<BandLimited*>(this)->torus(k); }

double BandLimited::real_symmetry_defect() const {
  double defect = 0.0;
  switch (manifold_.kind) {
    case ManifoldKind::Circle:
      for (int k = 0; k <= degree_; ++k) defect = std::max(defect, std::abs(circle(-k) - std::conj(circle(k))));
      break;
    case ManifoldKind::Torus: {
      // c_{-k} sits at the mirrored position
      const std::size_t n = coeffs_.size();
      for (std::size_t i = 0; i < n; ++i) defect = std::max(defect, std::abs(coeffs_[n - 1 - i] - std::conj(coeffs_[i])));
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= degree_; ++l)
        for (int m = 0; m <= l; ++m)
          defect = std::max(defect, std::abs(sphere(l, -m) - (m % 2 ? -1.0 : 1.0) * std::conj(sphere(l, m))));
      break;
  }
  return defect;
}

void BandLimited::mark_real(bool real) {
  if (real) {
    double scale = 1.0;
    for (const cplx& c : coeffs_) scale = std::max(scale, std::abs(c));
    if (real_symmetry_defect() > 1e-12 * scale) {
      throw std::invalid_argument("coefficients violate the conjugate symmetry of a real function");
    }
  }
  real_ = real;
}

BandLimited BandLimited::resized(int degree) const {
  BandLimited out(manifold_, degree);
  const int keep = std::min(degree, degree_);
  switch (manifold_.kind) {
    case ManifoldKind::Circle:
      for (int k = -keep; k <= keep; ++k) out.circle(k) = circle(k);
      break;
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= keep; ++l)
        for (int m = -l; m <= l; ++m) out.sphere(l, m) = sphere(l, m);
      break;
    case ManifoldKind::Torus: {
      const int m = manifold_.torus_dim;
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < coeffs_.size(); ++pos) {
        torus_multi_index(pos, degree_, m, k);
        bool inside = true;
        for (int d = 0; d < m; ++d) inside = inside && std::abs(k[static_cast<std::size_t>(d)]) <= keep;
        if (inside) out.torus(std::span<const int>(k.data(), static_cast<std::size_t>(m))) = coeffs_[pos];
      }
      break;
    }
  }
  out.real_ = real_;
  return out;
}

int BandLimited::effective_degree(double tol) const {
  int deg = 0;
  switch (manifold_.kind) {
    case ManifoldKind::Circle:
      for (int k = -degree_; k <= degree_; ++k)
        if (std::abs(circle(k)) > tol) deg = std::max(deg, std::abs(k));
      break;
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= degree_; ++l)
        for (int m = -l; m <= l; ++m)
          if (std::abs(sphere(l, m)) > tol) deg = std::max(deg, l);
      break;
    case ManifoldKind::Torus: {
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < coeffs_.size(); ++pos) {
        if (std::abs(coeffs_[pos]) <= tol) continue;
        torus_multi_index(pos, degree_, manifold_.torus_dim, k);
        for (int d = 0; d < manifold_.torus_dim; ++d) deg = std::max(deg, std::abs(k[static_cast<std::size_t>(d)]));
      }
      break;
    }
  }
  return deg;
}

void BandLimited::check_compatible(const BandLimited& o) const {
  if (!(manifold_ == o.manifold_)) throw std::invalid_argument("functions live on different manifolds");
}

BandLimited& BandLimited::operator+=(const BandLimited& o) {
  check_compatible(o);
  if (o.degree_ > degree_) *this = resized(o.degree_);
  const BandLimited b = o.degree_ == degree_ ? o : o.resized(degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  real_ = real_ && o.real_;
  return *this;
}

BandLimited& BandLimited::operator-=(const BandLimited& o) {
  check_compatible(o);
  if (o.degree_ > degree_) *this = resized(o.degree_);
  const BandLimited b = o.degree_ == degree_ ? o : o.resized(degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  real_ = real_ && o.real_;
  return *this;
}

BandLimited& BandLimited::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  real_ = real_ && s.imag() == 0.0;
  return *this;
}

// -- construction -----------------------------------------------------------

BandLimited constant_function(const ManifoldId& manifold, cplx value) {
  BandLimited f(manifold, 0);
  // Y_0^0 = 1/sqrt(4pi)
  f.coeffs()[0] = manifold.is_sphere() ? value * std::sqrt(4.0 * kPi) : value;
  if (value.imag() == 0.0) f.mark_real();
  return f;
}

BandLimited circle_exponential(int k, int degree) {
  BandLimited f(ManifoldId::circle(), std::max(std::abs(k), degree));
  f.circle(k) = 1.0;
  if (k == 0) f.mark_real();
  return f;
}

BandLimited spherical_harmonic(int l, int m, int degree) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("invalid spherical harmonic index");
  BandLimited f(ManifoldId::sphere(), std::max(l, degree));
  f.sphere(l, m) = 1.0;
  if (m == 0) f.mark_real();
  return f;
}

BandLimited fejer_kernel(int n) {
  if (n < 0) throw std::invalid_argument("Fejer kernel order must be nonnegative");
  BandLimited f(ManifoldId::circle(), n);
  for (int k = -n; k <= n; ++k) f.circle(k) = 0.5 * (1.0 - std::abs(k) / (n + 1.0));
  f.mark_real();
  return f;
}

BandLimited zonal_kernel(int n) {
  BandLimited f(ManifoldId::sphere(), n);
  for (int l = 0; l <= n; ++l) f.sphere(l, 0) = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi));
  f.mark_real();
  return f;
}

BandLimited random_bandlimited(const ManifoldId& manifold, int degree, std::uint64_t seed, bool real) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BandLimited f(manifold, degree);
  for (cplx& c : f.coeffs()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c = {re, im};
  }
  if (!real) return f;
  // average with the conjugate-symmetric partner
  BandLimited g = f;
  switch (manifold.kind) {
    case ManifoldKind::Circle:
      for (int k = -degree; k <= degree; ++k) g.circle(k) = 0.5 * (f.circle(k) + std::conj(f.circle(-k)));
      break;
    case ManifoldKind::Torus: {
      const std::size_t n = f.coeffs().size();
      for (std::size_t i = 0; i < n; ++i) g.coeffs()[i] = 0.5 * (f.coeffs()[i] + std::conj(f.coeffs()[n - 1 - i]));
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= degree; ++l)
        for (int m = -l; m <= l; ++m)
          g.sphere(l, m) = 0.5 * (f.sphere(l, m) + (m % 2 ? -1.0 : 1.0) * std::conj(f.sphere(l, -m)));
      break;
  }
  g.mark_real();
  return g;
}

std::vector<Monomial> random_polynomial(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Monomial> poly;
  for (int total = 0; total <= n; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        poly.push_back({a, b, total - a - b, {re, im}});
      }
  return poly;
}

BandLimited restrict_polynomial(std::span<const Monomial> poly, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  for (const Monomial& mono : poly) {
    if (mono.a < 0 || mono.b < 0 || mono.c < 0) throw std::invalid_argument("negative monomial exponent");
    if (mono.total_degree() > n) {
      throw std::invalid_argument("monomial of degree " + std::to_string(mono.total_degree()) + " exceeds " +
                                  std::to_string(n));
    }
  }
  const QuadratureRule rule = build_quadrature(ManifoldId::sphere(), 2 * n);
  std::vector<cplx> samples(rule.nodes.size());
  auto power = [](double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Point& x = rule.nodes[i];
    cplx v{};
    for (const Monomial& mono : poly) v += mono.coeff * (power(x[0], mono.a) * power(x[1], mono.b) * power(x[2], mono.c));
    samples[i] = v;
  }
  return project(samples, rule, n);
}

// -- synthesis / analysis ---------------------------------------------------

cplx eval(const BandLimited& f, const Point& x) {
  require_manifold(f, x);
  switch (f.manifold().kind) {
    case ManifoldKind::Circle: return trig_horner(f.coeffs().data(), f.degree(), x[0]);
    case ManifoldKind::Torus: return torus_value(f, x);
    case ManifoldKind::Sphere2: {
      sph::Legendre leg(f.degree());
      std::vector<cplx> g;
      return sphere_value(f, leg, active_columns(f), g, x);
    }
  }
  return {};
}

std::vector<cplx> eval_many(const BandLimited& f, std::span<const Point> xs) {
  std::vector<cplx> out(xs.size());
  if (f.manifold().is_sphere()) {
    sph::Legendre leg(f.degree());
    const std::vector<char> active = active_columns(f);
    std::vector<cplx> g;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      require_manifold(f, xs[i]);
      out[i] = sphere_value(f, leg, active, g, xs[i]);
    }
    return out;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = eval(f, xs[i]);
  return out;
}

std::vector<cplx> eval_sphere_grid(const BandLimited& f, std::span<const double> cos_theta,
                                   std::span<const double> sin_theta, std::span<const double> phi) {
  if (!f.manifold().is_sphere()) throw std::invalid_argument("sphere grid evaluation of a non-sphere function");
  const int n = f.degree();
  sph::Legendre leg(n);
  const std::vector<char> active = active_columns(f);
  std::vector<cplx> g;
  std::vector<cplx> out(cos_theta.size() * phi.size());
  // e^{-i n phi_j}, e^{i phi_j}
  std::vector<cplx> shift(phi.size()), step(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) {
    shift[j] = std::polar(1.0, -n * phi[j]);
    step[j] = std::polar(1.0, phi[j]);
  }
  for (std::size_t r = 0; r < cos_theta.size(); ++r) {
    leg.compute(cos_theta[r], sin_theta[r], active);
    sphere_columns(f, leg, active, g);
    for (std::size_t j = 0; j < phi.size(); ++j) {
      cplx s = g[static_cast<std::size_t>(2 * n)];
      for (int k = 2 * n - 1; k >= 0; --k) s = s * step[j] + g[static_cast<std::size_t>(k)];
      out[r * phi.size() + j] = s * shift[j];
    }
  }
  return out;
}

std::vector<cplx> eval_on_rule(const BandLimited& f, const QuadratureRule& rule) {
  if (!(f.manifold() == rule.manifold)) throw std::invalid_argument("rule and function live on different manifolds");
  if (!f.manifold().is_sphere()) return eval_many(f, rule.nodes);
  std::vector<double> sin_t(rule.ring_cos.size()), phi(static_cast<std::size_t>(rule.n_angle));
  for (std::size_t r = 0; r < rule.ring_cos.size(); ++r) sin_t[r] = std::sqrt(std::max(0.0, 1.0 - rule.ring_cos[r] * rule.ring_cos[r]));
  for (int j = 0; j < rule.n_angle; ++j) phi[static_cast<std::size_t>(j)] = j * kTwoPi / rule.n_angle;
  return eval_sphere_grid(f, rule.ring_cos, sin_t, phi);
}

BandLimited project(std::span<const cplx> samples, const QuadratureRule& rule, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (rule.exact_degree < 2 * degree) {
    throw std::invalid_argument("quadrature of exact degree " + std::to_string(rule.exact_degree) +
                                " cannot project degree " + std::to_string(degree) + " without aliasing");
  }
  if (samples.size() != rule.nodes.size()) throw std::invalid_argument("sample count does not match the rule");
  const ManifoldId& manifold = rule.manifold;
  BandLimited f(manifold, degree);

  switch (manifold.kind) {
    case ManifoldKind::Circle: {
      const double inv = 1.0 / kTwoPi;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const double t = rule.nodes[i][0];
        const cplx wf = rule.weights[i] * inv * samples[i];
        const cplx step = std::polar(1.0, -t);
        cplx e = std::polar(1.0, degree * t);  // e^{-ikt} at k = -degree
        for (int k = -degree; k <= degree; ++k) {
          f.circle(k) += wf * e;
          e *= step;
        }
      }
      break;
    }
    case ManifoldKind::Torus: {
      const int m = manifold.torus_dim;
      const double inv = 1.0 / manifold.measure();
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < f.coeffs().size(); ++pos) {
        torus_multi_index(pos, degree, m, k);
        cplx acc{};
        for (std::size_t i = 0; i < samples.size(); ++i) {
          double phase = 0.0;
          for (int d = 0; d < m; ++d) phase += k[static_cast<std::size_t>(d)] * rule.nodes[i][d];
          acc += rule.weights[i] * samples[i] * std::polar(1.0, -phase);
        }
        f.coeffs()[pos] = acc * inv;
      }
      break;
    }
    case ManifoldKind::Sphere2: {
      const auto nphi = static_cast<std::size_t>(rule.n_angle);
      if (rule.ring_cos.empty() || rule.ring_cos.size() * nphi != samples.size()) {
        throw std::invalid_argument("sphere projection needs a grid rule from build_quadrature");
      }
      sph::Legendre leg(degree);
      std::vector<cplx> fm(static_cast<std::size_t>(2 * degree + 1));
      std::vector<cplx> step(nphi), start(nphi);
      for (std::size_t j = 0; j < nphi; ++j) {
        const double phi = static_cast<double>(j) * kTwoPi / static_cast<double>(nphi);
        step[j] = std::polar(1.0, -phi);
        start[j] = std::polar(1.0, degree * phi);
      }
      const double h = kTwoPi / static_cast<double>(nphi);
      for (std::size_t r = 0; r < rule.ring_cos.size(); ++r) {
        // F_mu = sum_j v_j e^{-i mu phi_j}
        std::fill(fm.begin(), fm.end(), cplx{});
        for (std::size_t j = 0; j < nphi; ++j) {
          const cplx v = samples[r * nphi + j];
          cplx e = start[j];
          for (int mu = -degree; mu <= degree; ++mu) {
            fm[static_cast<std::size_t>(mu + degree)] += v * e;
            e *= step[j];
          }
        }
        const double z = rule.ring_cos[r];
        leg.compute(z, std::sqrt(std::max(0.0, 1.0 - z * z)));
        const double w = rule.ring_weight[r] * h;
        for (int l = 0; l <= degree; ++l)
          for (int mu = -l; mu <= l; ++mu) {
            const int am = std::abs(mu);
            const double sgn = (mu < 0 && (am % 2)) ? -1.0 : 1.0;
            f.sphere(l, mu) += w * sgn * leg(l, am) * fm[static_cast<std::size_t>(mu + degree)];
          }
      }
      break;
    }
  }
  return f;
}

// -- operators --------------------------------------------------------------

BandLimited translate(const BandLimited& f, const GroupElement& g, const QuadratureRule& rule) {
  if (!(f.manifold() == g.manifold())) throw std::invalid_argument("group element acts on another manifold");
  const int n = f.degree();
  if (!f.manifold().is_sphere()) {
    BandLimited out = f;
    const auto& s = g.shift_vector();
    if (f.manifold().kind == ManifoldKind::Circle) {
      for (int k = -n; k <= n; ++k) out.circle(k) *= std::polar(1.0, k * s[0]);
    } else {
      const int m = f.manifold().torus_dim;
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < out.coeffs().size(); ++pos) {
        torus_multi_index(pos, n, m, k);
        double phase = 0.0;
        for (int d = 0; d < m; ++d) phase += k[static_cast<std::size_t>(d)] * s[static_cast<std::size_t>(d)];
        out.coeffs()[pos] *= std::polar(1.0, phase);
      }
    }
    return out;
  }
  if (!(rule.manifold == f.manifold())) throw std::invalid_argument("rule lives on another manifold");
  std::vector<Point> moved(rule.nodes.size());
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] = group_act(g, rule.nodes[i]);
  BandLimited out = project(eval_many(f, moved), rule, n);
  if (f.real_valued()) {
    // restore exact symmetry lost to rounding
    for (int l = 0; l <= n; ++l)
      for (int m = 1; m <= l; ++m) {
        const cplx a = 0.5 * (out.sphere(l, m) + (m % 2 ? -1.0 : 1.0) * std::conj(out.sphere(l, -m)));
        out.sphere(l, m) = a;
        out.sphere(l, -m) = (m % 2 ? -1.0 : 1.0) * std::conj(a);
      }
    for (int l = 0; l <= n; ++l) out.sphere(l, 0) = out.sphere(l, 0).real();
    out.mark_real();
  }
  return out;
}

BandLimited translate(const BandLimited& f, const GroupElement& g) {
  if (!f.manifold().is_sphere()) return translate(f, g, QuadratureRule{});
  return translate(f, g, build_quadrature(f.manifold(), 2 * f.degree()));
}

BandLimited apply_generator(const BandLimited& f, GeneratorId j) {
  j.validate(f.manifold());
  const int n = f.degree();
  BandLimited out(f.manifold(), n);
  const cplx I{0.0, 1.0};
  switch (f.manifold().kind) {
    case ManifoldKind::Circle:
      for (int k = -n; k <= n; ++k) out.circle(k) = I * static_cast<double>(k) * f.circle(k);
      break;
    case ManifoldKind::Torus: {
      const int m = f.manifold().torus_dim;
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < out.coeffs().size(); ++pos) {
        torus_multi_index(pos, n, m, k);
        out.coeffs()[pos] = I * static_cast<double>(k[static_cast<std::size_t>(j.j - 1)]) * f.coeffs()[pos];
      }
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= n; ++l) {
        const double ll = l * (l + 1.0);
        // a_+(m) = sqrt(l(l+1) - m(m+1)): Y^m -> Y^{m+1}; a_-(m) = sqrt(l(l+1) - m(m-1)): Y^m -> Y^{m-1}
        auto a_plus = [&](int m) { return std::sqrt(std::max(0.0, ll - m * (m + 1.0))); };
        auto a_minus = [&](int m) { return std::sqrt(std::max(0.0, ll - m * (m - 1.0))); };
        for (int m = -l; m <= l; ++m) {
          if (j.j == 3) {
            out.sphere(l, m) = I * static_cast<double>(m) * f.sphere(l, m);
            continue;
          }
          const cplx from_below = m - 1 >= -l ? a_plus(m - 1) * f.sphere(l, m - 1) : cplx{};
          const cplx from_above = m + 1 <= l ? a_minus(m + 1) * f.sphere(l, m + 1) : cplx{};
          out.sphere(l, m) = j.j == 1 ? 0.5 * I * (from_below + from_above) : 0.5 * (from_below - from_above);
        }
      }
      break;
  }
  if (f.real_valued()) out.mark_real();
  return out;
}

BandLimited apply_generators(const BandLimited& f, std::span<const int> indices) {
  BandLimited out = f;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) out = apply_generator(out, GeneratorId{*it});
  return out;
}

BandLimited laplacian_exact(const BandLimited& f) {
  const int n = f.degree();
  BandLimited out = f;
  switch (f.manifold().kind) {
    case ManifoldKind::Circle:
      for (int k = -n; k <= n; ++k) out.circle(k) *= static_cast<double>(k) * k;
      break;
    case ManifoldKind::Torus: {
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < out.coeffs().size(); ++pos) {
        torus_multi_index(pos, n, f.manifold().torus_dim, k);
        double lambda = 0.0;
        for (int d = 0; d < f.manifold().torus_dim; ++d) lambda += static_cast<double>(k[static_cast<std::size_t>(d)]) * k[static_cast<std::size_t>(d)];
        out.coeffs()[pos] *= lambda;
      }
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= n; ++l)
        for (int m = -l; m <= l; ++m) out.sphere(l, m) *= l * (l + 1.0);
      break;
  }
  return out;
}

BandLimited laplacian_power(const BandLimited& f, int k) {
  if (k < 0) throw std::invalid_argument("Laplacian power must be nonnegative");
  BandLimited out = f;
  for (int i = 0; i < k; ++i) out = laplacian_exact(out);
  return out;
}

double l2_norm(const BandLimited& f) {
  std::vector<double> sq(f.coeffs().size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(f.coeffs()[i]);
  const double scale = f.manifold().is_sphere() ? 1.0 : f.manifold().measure();
  return std::sqrt(scale * pairwise_sum(sq));
}

double SpectrumView::max_lambda(double tol) const {
  double lam = 0.0;
  for (const SpectrumBlock& b : blocks)
    if (b.norm > tol) lam = std::max(lam, b.lambda);
  return lam;
}

SpectrumView spectrum(const BandLimited& f) {
  const int n = f.degree();
  std::map<long, double> blocks;  // eigenvalue -> squared norm
  const double scale = f.manifold().is_sphere() ? 1.0 : f.manifold().measure();
  switch (f.manifold().kind) {
    case ManifoldKind::Circle:
      for (int k = -n; k <= n; ++k) {
        const double v = std::norm(f.circle(k));
        if (v > 0.0) blocks[static_cast<long>(k) * k] += scale * v;
      }
      break;
    case ManifoldKind::Torus: {
      std::array<int, 4> k{};
      for (std::size_t pos = 0; pos < f.coeffs().size(); ++pos) {
        const double v = std::norm(f.coeffs()[pos]);
        if (v == 0.0) continue;
        torus_multi_index(pos, n, f.manifold().torus_dim, k);
        long lambda = 0;
        for (int d = 0; d < f.manifold().torus_dim; ++d) lambda += static_cast<long>(k[static_cast<std::size_t>(d)]) * k[static_cast<std::size_t>(d)];
        blocks[lambda] += scale * v;
      }
      break;
    }
    case ManifoldKind::Sphere2:
      for (int l = 0; l <= n; ++l)
        for (int m = -l; m <= l; ++m) {
          const double v = std::norm(f.sphere(l, m));
          if (v > 0.0) blocks[static_cast<long>(l) * (l + 1)] += v;
        }
      break;
  }
  SpectrumView view;
  for (const auto& [lambda, sq] : blocks) view.blocks.push_back({static_cast<double>(lambda), std::sqrt(sq)});
  return view;
}

// -- serialization ----------------------------------------------------------

nlohmann::ordered_json to_json(const BandLimited& f) {
  nlohmann::ordered_json j;
  j["manifold"] = f.manifold().name();
  j["degree"] = f.degree();
  j["real"] = f.real_valued();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const cplx& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  j["coeffs"] = std::move(coeffs);
  return j;
}

BandLimited bandlimited_from_json(const nlohmann::ordered_json& j) {
  const ManifoldId manifold = ManifoldId::parse(j.at("manifold").get<std::string>());
  const int degree = j.at("degree").get<int>();
  std::vector<cplx> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("coefficient must be a [re, im] pair");
    coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  BandLimited f(manifold, degree, std::move(coeffs));
  if (j.contains("real") && j["real"].get<bool>()) f.mark_real();
  return f;
}

}  // namespace riesz

#include "riesz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riesz {

ManifoldId ManifoldId::torus(int m) {
  if (m < 1 || m > kMaxTorusDim) {
    throw std::invalid_argument("torus dimension must be in 1.." + std::to_string(kMaxTorusDim));
  }
  return {ManifoldKind::Torus, m};
}

int ManifoldId::dim_m() const {
  switch (kind) {
    case ManifoldKind::Circle: return 1;
    case ManifoldKind::Torus: return torus_dim;
    case ManifoldKind::Sphere2: return 2;
  }
  return 0;
}

int ManifoldId::dim_d() const {
  switch (kind) {
    case ManifoldKind::Circle: return 1;
    case ManifoldKind::Torus: return torus_dim;
    case ManifoldKind::Sphere2: return 3;
  }
  return 0;
}

double ManifoldId::measure() const {
  switch (kind) {
    case ManifoldKind::Circle: return kTwoPi;
    case ManifoldKind::Torus: return std::pow(kTwoPi, torus_dim);
    case ManifoldKind::Sphere2: return 4.0 * kPi;
  }
  return 0.0;
}

int ManifoldId::coord_count() const { return kind == ManifoldKind::Sphere2 ? 3 : dim_m(); }

std::string ManifoldId::name() const {
  switch (kind) {
    case ManifoldKind::Circle: return "circle";
    case ManifoldKind::Torus: return "torus" + std::to_string(torus_dim);
    case ManifoldKind::Sphere2: return "sphere2";
  }
  return "?";
}

ManifoldId ManifoldId::parse(const std::string& name) {
  if (name == "circle" || name == "S1") return circle();
  if (name == "sphere" || name == "sphere2" || name == "S2") return sphere();
  if (name.rfind("torus", 0) == 0 && name.size() > 5) return torus(std::stoi(name.substr(5)));
  if (name.rfind("T", 0) == 0 && name.size() > 1) return torus(std::stoi(name.substr(1)));
  throw std::invalid_argument("unknown manifold '" + name + "'");
}

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

Point Point::circle(double angle) {
  Point p;
  p.manifold_ = ManifoldId::circle();
  p.c_[0] = wrap_angle(angle);
  return p;
}

Point Point::torus(std::span<const double> angles) {
  Point p;
  p.manifold_ = ManifoldId::torus(static_cast<int>(angles.size()));
  for (std::size_t i = 0; i < angles.size(); ++i) p.c_[i] = wrap_angle(angles[i]);
  return p;
}

Point Point::sphere(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("sphere point must be a nonzero finite vector");
  Point p;
  p.manifold_ = ManifoldId::sphere();
  p.c_ = {x / n, y / n, z / n, 0.0};
  return p;
}

Point Point::sphere_polar(double theta, double phi) {
  const double s = std::sin(theta);
  return sphere(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

Mat3 mat_identity() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

Mat3 mat_transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

double mat_det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

namespace {

double orthogonality_drift(const Mat3& r) {
  const Mat3 rtr = mat_mul(mat_transpose(r), r);
  double drift = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) drift = std::max(drift, std::abs(rtr[i][j] - (i == j ? 1.0 : 0.0)));
  return drift;
}

// One Newton step of the polar iteration R <- (R + R^{-T}) / 2.
Mat3 polar_step(const Mat3& r) {
  const double det = mat_det(r);
  Mat3 cof{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      cof[i][j] = r[i1][j1] * r[i2][j2] - r[i1][j2] * r[i2][j1];
    }
  // R^{-T} = cofactor matrix / det
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = 0.5 * (r[i][j] + cof[i][j] / det);
  return out;
}

}  // namespace

Mat3 axis_rotation(int axis, double t) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("rotation axis must be 1, 2 or 3");
  const double c = std::cos(t), s = std::sin(t);
  // (axis, j, k) cyclic; e_j -> c e_j + s e_k, e_k -> -s e_j + c e_k
  const int i = axis - 1, j = axis % 3, k = (axis + 1) % 3;
  Mat3 r{};
  r[i][i] = 1.0;
  r[j][j] = c;
  r[k][j] = s;
  r[j][k] = -s;
  r[k][k] = c;
  return r;
}

Mat3 euler_zyz(double alpha, double beta, double gamma) {
  return mat_mul(axis_rotation(3, alpha), mat_mul(axis_rotation(2, beta), axis_rotation(3, gamma)));
}

GroupElement GroupElement::identity(const ManifoldId& manifold) {
  GroupElement g;
  g.manifold_ = manifold;
  return g;
}

GroupElement GroupElement::shift(const ManifoldId& manifold, std::span<const double> s) {
  if (manifold.is_sphere()) throw std::invalid_argument("shift elements act on the circle or torus only");
  if (static_cast<int>(s.size()) != manifold.dim_m()) throw std::invalid_argument("shift vector dimension mismatch");
  GroupElement g;
  g.manifold_ = manifold;
  for (std::size_t i = 0; i < s.size(); ++i) g.shift_[i] = s[i];
  return g;
}

GroupElement GroupElement::rotation(const Mat3& r) {
  if (orthogonality_drift(r) > 1e-10 || std::abs(mat_det(r) - 1.0) > 1e-10) {
    throw std::invalid_argument("rotation matrix must be orthogonal with determinant +1");
  }
  GroupElement g;
  g.manifold_ = ManifoldId::sphere();
  g.rot_ = r;
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g = *this;
  if (manifold_.is_sphere()) {
    g.rot_ = mat_transpose(rot_);
  } else {
    for (int i = 0; i < manifold_.dim_m(); ++i) g.shift_[static_cast<std::size_t>(i)] = -shift_[static_cast<std::size_t>(i)];
  }
  return g;
}

void GeneratorId::validate(const ManifoldId& manifold) const {
  if (j < 1 || j > manifold.dim_d()) {
    throw std::invalid_argument("generator index " + std::to_string(j) + " out of range 1.." +
                                std::to_string(manifold.dim_d()) + " for " + manifold.name());
  }
}

GroupElement flow_element(const ManifoldId& manifold, GeneratorId j, double t) {
  j.validate(manifold);
  if (manifold.is_sphere()) return GroupElement::rotation(axis_rotation(j.j, t));
  std::array<double, 4> s{};
  s[static_cast<std::size_t>(j.j - 1)] = t;
  return GroupElement::shift(manifold, std::span<const double>(s.data(), static_cast<std::size_t>(manifold.dim_m())));
}

Point flow(const ManifoldId& manifold, GeneratorId j, double t, const Point& x) {
  if (!(x.manifold() == manifold)) throw std::invalid_argument("point is not on " + manifold.name());
  return group_act(flow_element(manifold, j, t), x);
}

Point group_act(const GroupElement& g, const Point& x) {
  if (!(g.manifold() == x.manifold())) throw std::invalid_argument("group element and point live on different manifolds");
  const auto& c = x.raw();
  if (x.manifold().is_sphere()) {
    const Mat3& r = g.matrix();
    return Point::sphere(r[0][0] * c[0] + r[0][1] * c[1] + r[0][2] * c[2],
                         r[1][0] * c[0] + r[1][1] * c[1] + r[1][2] * c[2],
                         r[2][0] * c[0] + r[2][1] * c[1] + r[2][2] * c[2]);
  }
  const int m = x.manifold().dim_m();
  std::array<double, 4> a{};
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + g.shift_vector()[static_cast<std::size_t>(i)];
  if (x.manifold().kind == ManifoldKind::Circle) return Point::circle(a[0]);
  return Point::torus(std::span<const double>(a.data(), static_cast<std::size_t>(m)));
}

GroupElement group_compose(const GroupElement& g1, const GroupElement& g2) {
  if (!(g1.manifold() == g2.manifold())) throw std::invalid_argument("cannot compose elements of different groups");
  if (g1.manifold().is_sphere()) {
    Mat3 r = mat_mul(g1.matrix(), g2.matrix());
    if (orthogonality_drift(r) > 1e-12) r = polar_step(r);
    return GroupElement::rotation(r);
  }
  const int m = g1.manifold().dim_m();
  std::array<double, 4> s{};
  for (int i = 0; i < m; ++i) {
    const auto u = static_cast<std::size_t>(i);
    s[u] = g1.shift_vector()[u] + g2.shift_vector()[u];
  }
  return GroupElement::shift(g1.manifold(), std::span<const double>(s.data(), static_cast<std::size_t>(m)));
}

double geodesic_distance(const Point& x, const Point& y) {
  if (!(x.manifold() == y.manifold())) throw std::invalid_argument("points live on different manifolds");
  const auto& a = x.raw();
  const auto& b = y.raw();
  if (x.manifold().is_sphere()) {
    const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    const double cx = a[1] * b[2] - a[2] * b[1], cy = a[2] * b[0] - a[0] * b[2], cz = a[0] * b[1] - a[1] * b[0];
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
  }
  double s = 0.0;
  for (int i = 0; i < x.manifold().dim_m(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    double d = std::abs(a[u] - b[u]);
    d = std::min(d, kTwoPi - d);
    s += d * d;
  }
  return std::sqrt(s);
}

Point origin(const ManifoldId& manifold) {
  switch (manifold.kind) {
    case ManifoldKind::Circle: return Point::circle(0.0);
    case ManifoldKind::Torus: {
      std::array<double, 4> z{};
      return Point::torus(std::span<const double>(z.data(), static_cast<std::size_t>(manifold.torus_dim)));
    }
    case ManifoldKind::Sphere2: return Point::sphere(0.0, 0.0, 1.0);
  }
  return {};
}

}  // namespace riesz

#include "riesz/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace riesz {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)
constexpr double kCoverSlack = 1e-12;
constexpr std::uint64_t kRotationSeed = 0x5EED;

using Vec3 = std::array<double, 3>;

Vec3 vec(const Point& p) { return {p[0], p[1], p[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Point> fibonacci_points(std::size_t count) {
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kGoldenAngle * static_cast<double>(i);
    pts.push_back(Point::sphere(s * std::cos(phi), s * std::sin(phi), z));
  }
  return pts;
}

// Uniform bucket grid over the unit cube for radius queries on S^2.
class SphereIndex {
 public:
  explicit SphereIndex(double cell) : cell_(cell) {}

  void insert(const Point& p, std::size_t id) {
    buckets_[key(cell_of(p[0]), cell_of(p[1]), cell_of(p[2]))].push_back(id);
    pts_.push_back(vec(p));
  }
  std::size_t size() const { return pts_.size(); }
  const Vec3& at(std::size_t id) const { return pts_[id]; }

  // Calls fn(id, geodesic distance) for every stored point within `radius`.
  template <class Fn>
  void within(const Point& p, double radius, Fn&& fn) const {
    const double chord = 2.0 * std::sin(std::min(radius, kPi) / 2.0);
    const int reach = static_cast<int>(std::ceil(chord / cell_));
    const int cx = cell_of(p[0]), cy = cell_of(p[1]), cz = cell_of(p[2]);
    const Vec3 q = vec(p);
    for (int dx = -reach; dx <= reach; ++dx)
      for (int dy = -reach; dy <= reach; ++dy)
        for (int dz = -reach; dz <= reach; ++dz) {
          auto it = buckets_.find(key(cx + dx, cy + dy, cz + dz));
          if (it == buckets_.end()) continue;
          for (std::size_t id : it->second) {
            const double d = std::acos(std::clamp(dot(q, pts_[id]), -1.0, 1.0));
            if (d <= radius) fn(id, d);
          }
        }
  }

  double nearest(const Point& p, double search) const {
    double best = kPi;
    within(p, search, [&](std::size_t, double d) { best = std::min(best, d); });
    return best;
  }

 private:
  int cell_of(double x) const { return static_cast<int>(std::floor((x + 1.0) / cell_)); }
  static std::int64_t key(int x, int y, int z) {
    return (static_cast<std::int64_t>(x) * 4096 + y) * 4096 + z;
  }
  double cell_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
  std::vector<Vec3> pts_;
};

GroupElement motion_to(const Point& x) {
  if (x.manifold().is_sphere()) {
    const double theta = std::acos(std::clamp(x[2], -1.0, 1.0));
    const double phi = std::atan2(x[1], x[0]);
    return GroupElement::rotation(mat_mul(axis_rotation(3, phi), axis_rotation(2, theta)));
  }
  const auto& raw = x.raw();
  return GroupElement::shift(x.manifold(), std::span<const double>(raw.data(), static_cast<std::size_t>(x.size())));
}

std::vector<Point> sphere_centers(double r) {
  const double cap = kTwoPi * (1.0 - std::cos(r));
  const auto count = static_cast<std::size_t>(std::ceil(100.0 * 4.0 * kPi / cap));
  const double sep = 2.0 * r;
  SphereIndex index(sep);
  std::vector<Point> centers;
  auto try_add = [&](const Point& p) {
    bool clear = true;
    index.within(p, sep, [&](std::size_t, double) { clear = false; });
    if (!clear) return false;
    index.insert(p, centers.size());
    centers.push_back(p);
    return true;
  };
  try_add(origin(ManifoldId::sphere()));
  for (const Point& p : fibonacci_points(count)) try_add(p);

  // Every point farthest from the centers is a circumcenter of three nearby
  // centers; add those left uncovered until none remain.
  bool added = true;
  while (added) {
    added = false;
    const std::size_t n = centers.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::size_t> nb;
      index.within(centers[c], 5.0 * r, [&](std::size_t id, double) {
        if (id != c) nb.push_back(id);
      });
      std::sort(nb.begin(), nb.end());
      const Vec3 a = index.at(c);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t k = i + 1; k < nb.size(); ++k) {
          Vec3 nrm = cross(sub(index.at(nb[i]), a), sub(index.at(nb[k]), a));
          const double len = std::sqrt(dot(nrm, nrm));
          if (len < 1e-14) continue;
          if (dot(nrm, a) < 0.0) nrm = {-nrm[0], -nrm[1], -nrm[2]};
          const Point cc = Point::sphere(nrm[0], nrm[1], nrm[2]);
          if (index.nearest(cc, 3.0 * r) > sep && try_add(cc)) added = true;
        }
    }
  }
  // Safety net against a missed hole.
  for (const Point& p : fibonacci_points(count)) {
    if (index.nearest(p, 3.0 * r) > sep * (1.0 + kCoverSlack)) try_add(p);
  }
  return centers;
}

void require_same(const BandLimited& f, const Lattice& lat) {
  if (!(f.manifold() == lat.manifold)) {
    throw std::invalid_argument("function on " + f.manifold().name() + " but lattice on " + lat.manifold.name());
  }
}

}  // namespace

Lattice build_lattice(const ManifoldId& manifold, double r) {
  if (!(r > 0.0) || !(r < kPi / 4.0)) {
    throw std::invalid_argument("lattice radius must satisfy 0 < r < pi/4, got " + std::to_string(r));
  }
  Lattice lat;
  lat.manifold = manifold;
  lat.r = r;
  switch (manifold.kind) {
    case ManifoldKind::Circle: {
      const int n = static_cast<int>(std::ceil(kPi / (2.0 * r) - 1e-12));
      for (int i = 0; i < n; ++i) lat.centers.push_back(Point::circle(i * kTwoPi / n));
      break;
    }
    case ManifoldKind::Torus: {
      const int m = manifold.torus_dim;
      if (m > 3) throw std::invalid_argument("torus lattices are built for dimension <= 3");
      const int n = static_cast<int>(std::ceil(kPi * std::sqrt(static_cast<double>(m)) / (2.0 * r) - 1e-12));
      if (kTwoPi / n <= 2.0 * r) throw std::invalid_argument("radius too large for a separated torus grid");
      std::size_t total = 1;
      for (int d = 0; d < m; ++d) total *= static_cast<std::size_t>(n);
      std::array<double, 4> a{};
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int d = m - 1; d >= 0; --d) {
          a[static_cast<std::size_t>(d)] = static_cast<double>(rem % static_cast<std::size_t>(n)) * kTwoPi / n;
          rem /= static_cast<std::size_t>(n);
        }
        lat.centers.push_back(Point::torus(std::span<const double>(a.data(), static_cast<std::size_t>(m))));
      }
      break;
    }
    case ManifoldKind::Sphere2:
      lat.centers = sphere_centers(r);
      break;
  }
  for (const Point& x : lat.centers) lat.group_elements.push_back(motion_to(x));
  lat.verified_multiplicity = verify_lattice(lat).multiplicity;
  return lat;
}

LatticeCheck verify_lattice(const Lattice& lat, int probes) {
  if (probes < 1000) throw std::invalid_argument("verify_lattice needs at least 1000 probes");
  LatticeCheck out;
  const double r = lat.r;
  const auto& cs = lat.centers;
  out.min_separation = kPi;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) out.min_separation = std::min(out.min_separation, geodesic_distance(cs[i], cs[j]));
  out.disjoint = cs.size() < 2 || out.min_separation > 2.0 * r;

  std::vector<Point> probe_set;
  switch (lat.manifold.kind) {
    case ManifoldKind::Circle:
      for (int i = 0; i < probes; ++i) probe_set.push_back(Point::circle(i * kTwoPi / probes));
      break;
    case ManifoldKind::Torus: {
      const int m = lat.manifold.torus_dim;
      const int per = std::max(2, static_cast<int>(std::ceil(std::pow(probes, 1.0 / m))));
      std::size_t total = 1;
      for (int d = 0; d < m; ++d) total *= static_cast<std::size_t>(per);
      std::array<double, 4> a{};
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int d = m - 1; d >= 0; --d) {
          a[static_cast<std::size_t>(d)] = static_cast<double>(rem % static_cast<std::size_t>(per)) * kTwoPi / per;
          rem /= static_cast<std::size_t>(per);
        }
        probe_set.push_back(Point::torus(std::span<const double>(a.data(), static_cast<std::size_t>(m))));
      }
      break;
    }
    case ManifoldKind::Sphere2:
      probe_set = fibonacci_points(static_cast<std::size_t>(probes));
      break;
  }
  probe_set.insert(probe_set.end(), cs.begin(), cs.end());

  const double cover_radius = 2.0 * r * (1.0 + kCoverSlack);
  const double mult_radius = 4.0 * r * (1.0 + kCoverSlack);
  out.cover = !cs.empty();
  if (lat.manifold.is_sphere()) {
    SphereIndex index(2.0 * r);
    for (std::size_t i = 0; i < cs.size(); ++i) index.insert(cs[i], i);
    for (const Point& p : probe_set) {
      int count = 0;
      double nearest = kPi;
      index.within(p, std::max(mult_radius, 3.0 * r), [&](std::size_t, double d) {
        nearest = std::min(nearest, d);
        if (d <= mult_radius) ++count;
      });
      out.max_probe_gap = std::max(out.max_probe_gap, nearest);
      out.multiplicity = std::max(out.multiplicity, count);
    }
  } else {
    for (const Point& p : probe_set) {
      int count = 0;
      double nearest = kPi * std::sqrt(static_cast<double>(lat.manifold.dim_m()));
      for (const Point& c : cs) {
        const double d = geodesic_distance(p, c);
        nearest = std::min(nearest, d);
        if (d <= mult_radius) ++count;
      }
      out.max_probe_gap = std::max(out.max_probe_gap, nearest);
      out.multiplicity = std::max(out.multiplicity, count);
    }
  }
  out.cover = out.cover && out.max_probe_gap <= cover_radius;
  return out;
}

double sampled_pnorm(const BandLimited& f, const Lattice& lat, NormParams p, const GroupElement& g, ActionOrder order) {
  require_same(f, lat);
  if (!(g.manifold() == lat.manifold)) throw std::invalid_argument("motion acts on another manifold");
  std::vector<Point> pts(lat.centers.size());
  const Point o = origin(lat.manifold);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i] = order == ActionOrder::MotionFirst ? group_act(g, lat.centers[i])
                                               : group_act(group_compose(lat.group_elements[i], g), o);
  }
  const std::vector<cplx> vals = eval_many(f, pts);
  if (p.is_inf()) {
    double best = 0.0;
    for (const cplx& v : vals) best = std::max(best, std::abs(v));
    return best;
  }
  std::vector<double> terms(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) terms[i] = std::pow(std::abs(vals[i]), p.p());
  const double m = lat.manifold.dim_m();
  return std::pow(lat.r, m / p.p()) * std::pow(pairwise_sum(terms), 1.0 / p.p());
}

std::vector<GroupElement> group_sample(const ManifoldId& manifold, int group_grid_size) {
  if (group_grid_size < 8) throw std::invalid_argument("group grid size must be >= 8");
  const int G = group_grid_size;
  std::vector<GroupElement> out;
  if (!manifold.is_sphere()) {
    const int m = manifold.dim_m();
    std::size_t total = 1;
    for (int d = 0; d < m; ++d) total *= static_cast<std::size_t>(G);
    std::array<double, 4> a{};
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (int d = m - 1; d >= 0; --d) {
        a[static_cast<std::size_t>(d)] = static_cast<double>(rem % static_cast<std::size_t>(G)) * kTwoPi / G;
        rem /= static_cast<std::size_t>(G);
      }
      out.push_back(GroupElement::shift(manifold, std::span<const double>(a.data(), static_cast<std::size_t>(m))));
    }
    return out;
  }
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int c = 0; c < G; ++c)
        out.push_back(GroupElement::rotation(euler_zyz(a * kTwoPi / G, b * kPi / G, c * kTwoPi / G)));
  // uniform rotations from normalized Gaussian quaternions
  std::mt19937_64 rng(kRotationSeed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < 64; ++i) {
    double q[4];
    double len = 0.0;
    for (double& v : q) {
      v = gauss(rng);
      len += v * v;
    }
    len = std::sqrt(len);
    const double w = q[0] / len, x = q[1] / len, y = q[2] / len, z = q[3] / len;
    const Mat3 rot = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
                       {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
                       {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
    out.push_back(GroupElement::rotation(rot));
  }
  return out;
}

double sup_sampled_pnorm(const BandLimited& f, const Lattice& lat, NormParams p, int group_grid_size) {
  require_same(f, lat);
  double best = 0.0;
  for (const GroupElement& g : group_sample(lat.manifold, group_grid_size)) best = std::max(best, sampled_pnorm(f, lat, p, g));
  return best;
}

nlohmann::ordered_json to_json(const Lattice& lat) {
  nlohmann::ordered_json j;
  j["manifold"] = lat.manifold.name();
  j["r"] = lat.r;
  nlohmann::ordered_json centers = nlohmann::ordered_json::array();
  for (const Point& x : lat.centers) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (int i = 0; i < x.size(); ++i) c.push_back(x[i]);
    centers.push_back(std::move(c));
  }
  j["centers"] = std::move(centers);
  j["multiplicity"] = lat.verified_multiplicity;
  return j;
}

Lattice lattice_from_json(const nlohmann::ordered_json& j) {
  Lattice lat;
  lat.manifold = ManifoldId::parse(j.at("manifold").get<std::string>());
  lat.r = j.at("r").get<double>();
  for (const auto& c : j.at("centers")) {
    std::vector<double> v = c.get<std::vector<double>>();
    if (static_cast<int>(v.size()) != lat.manifold.coord_count()) throw std::invalid_argument("center has wrong arity");
    Point x;
    switch (lat.manifold.kind) {
      case ManifoldKind::Circle: x = Point::circle(v[0]); break;
      case ManifoldKind::Torus: x = Point::torus(v); break;
      case ManifoldKind::Sphere2: x = Point::sphere(v[0], v[1], v[2]); break;
    }
    lat.centers.push_back(x);
    lat.group_elements.push_back(motion_to(x));
  }
  lat.verified_multiplicity = j.at("multiplicity").get<int>();
  return lat;
}

}  // namespace riesz

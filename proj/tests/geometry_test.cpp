#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "riesz/geometry.hpp"
#include "support.hpp"

using namespace riesz;
using testing_support::uniform;

namespace {

double point_gap(const Point& a, const Point& b) {
  double g = 0.0;
  for (int i = 0; i < a.size(); ++i) g = std::max(g, std::abs(a[i] - b[i]));
  return g;
}

Point random_point(const ManifoldId& m) {
  if (m.kind == ManifoldKind::Circle) return Point::circle(uniform(0, kTwoPi));
  if (m.is_sphere()) return Point::sphere_polar(std::acos(uniform(-1, 1)), uniform(0, kTwoPi));
  double a[4];
  for (int i = 0; i < m.torus_dim; ++i) a[i] = uniform(0, kTwoPi);
  return Point::torus({a, static_cast<std::size_t>(m.torus_dim)});
}

GroupElement random_motion(const ManifoldId& m) {
  if (m.is_sphere()) return GroupElement::rotation(euler_zyz(uniform(0, kTwoPi), uniform(0, kPi), uniform(0, kTwoPi)));
  double s[4];
  for (int i = 0; i < m.dim_m(); ++i) s[i] = uniform(-10, 10);
  return GroupElement::shift(m, {s, static_cast<std::size_t>(m.dim_m())});
}

const ManifoldId kManifolds[] = {ManifoldId::circle(), ManifoldId::torus(2), ManifoldId::torus(3), ManifoldId::sphere()};

}  // namespace

TEST_CASE("manifold dimensions") {
  CHECK(ManifoldId::circle().dim_m() == 1);
  CHECK(ManifoldId::circle().dim_d() == 1);
  CHECK(ManifoldId::sphere().dim_m() == 2);
  CHECK(ManifoldId::sphere().dim_d() == 3);
  CHECK(ManifoldId::torus(3).dim_d() == 3);
  CHECK(ManifoldId::sphere().measure() == doctest::Approx(4 * kPi));
  for (const ManifoldId& m : kManifolds) {
    CHECK(m.dim_d() >= m.dim_m());
    CHECK(ManifoldId::parse(m.name()) == m);
  }
  CHECK_THROWS_AS(ManifoldId::parse("klein-bottle"), std::invalid_argument);
  CHECK_THROWS_AS(ManifoldId::torus(0), std::invalid_argument);
}

TEST_CASE("flow examples") {
  const Point c = flow(ManifoldId::circle(), GeneratorId{1}, kPi / 2, Point::circle(0.0));
  CHECK(c[0] == doctest::Approx(kPi / 2).epsilon(1e-15));

  const Point s = flow(ManifoldId::sphere(), GeneratorId{3}, kPi / 2, Point::sphere(1, 0, 0));
  CHECK(point_gap(s, Point::sphere(0, 1, 0)) < 1e-15);
  // cyclic convention: axis 1 carries e_2 to e_3, axis 2 carries e_3 to e_1
  CHECK(point_gap(flow(ManifoldId::sphere(), GeneratorId{1}, kPi / 2, Point::sphere(0, 1, 0)), Point::sphere(0, 0, 1)) < 1e-15);
  CHECK(point_gap(flow(ManifoldId::sphere(), GeneratorId{2}, kPi / 2, Point::sphere(0, 0, 1)), Point::sphere(1, 0, 0)) < 1e-15);

  for (const ManifoldId& m : kManifolds) {
    const Point x = random_point(m);
    for (int j = 1; j <= m.dim_d(); ++j) CHECK(point_gap(flow(m, GeneratorId{j}, 0.0, x), x) == 0.0);
  }
  CHECK_THROWS(flow(ManifoldId::circle(), GeneratorId{2}, 0.1, Point::circle(0)));
  CHECK_THROWS(flow(ManifoldId::sphere(), GeneratorId{0}, 0.1, Point::sphere(0, 0, 1)));
}

TEST_CASE("angles are normalized and sphere points are unit") {
  CHECK(Point::circle(-0.5)[0] == doctest::Approx(kTwoPi - 0.5));
  CHECK(Point::circle(7 * kPi)[0] == doctest::Approx(kPi));
  const Point p = Point::sphere(3, 4, 12);
  CHECK(std::hypot(p[0], p[1], p[2]) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS(Point::sphere(0, 0, 0));
}

TEST_CASE("group action examples") {
  for (const ManifoldId& m : kManifolds) {
    const Point x = random_point(m);
    CHECK(point_gap(group_act(GroupElement::identity(m), x), x) < 1e-15);
  }
  const GroupElement rz = GroupElement::rotation(axis_rotation(3, kPi / 2));
  CHECK(point_gap(group_act(rz, Point::sphere(1, 0, 0)), Point::sphere(0, 1, 0)) < 1e-15);

  const Mat3 sheared = {{{1, 0.1, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(GroupElement::rotation(sheared), std::invalid_argument);
  const Mat3 reflection = {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_THROWS_AS(GroupElement::rotation(reflection), std::invalid_argument);
  CHECK_THROWS(group_act(rz, Point::circle(0.3)));
}

TEST_CASE("composition examples") {
  const ManifoldId s2 = ManifoldId::sphere();
  const GroupElement g = random_motion(s2);
  const GroupElement eg = group_compose(GroupElement::identity(s2), g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(eg.matrix()[i][j] == doctest::Approx(g.matrix()[i][j]).epsilon(1e-15));

  const double a = 0.7, b = -2.1;
  const GroupElement ab =
      group_compose(GroupElement::rotation(axis_rotation(3, a)), GroupElement::rotation(axis_rotation(3, b)));
  const Mat3 direct = axis_rotation(3, a + b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(ab.matrix()[i][j] - direct[i][j]) < 1e-15);

  GroupElement acc = GroupElement::identity(s2);
  for (int i = 0; i < 1000; ++i) acc = group_compose(acc, random_motion(s2));
  CHECK(std::abs(mat_det(acc.matrix()) - 1.0) < 1e-10);
  CHECK_THROWS(group_compose(GroupElement::identity(ManifoldId::circle()), g));
}

TEST_CASE("distance examples") {
  for (const ManifoldId& m : kManifolds) {
    const Point x = random_point(m);
    CHECK(geodesic_distance(x, x) == 0.0);
  }
  CHECK(geodesic_distance(Point::sphere(0, 0, 1), Point::sphere(0, 0, -1)) == doctest::Approx(kPi));
  CHECK(geodesic_distance(Point::circle(0.1), Point::circle(kTwoPi - 0.1)) == doctest::Approx(0.2).epsilon(1e-14));
  const double t2[2] = {0.1, 3.0}, u2[2] = {kTwoPi - 0.2, 3.4};
  CHECK(geodesic_distance(Point::torus(t2), Point::torus(u2)) == doctest::Approx(0.5).epsilon(1e-14));
  // tiny separations resolve below the acos floor
  const Point n = Point::sphere(0, 0, 1), near = Point::sphere_polar(1e-9, 0.3);
  CHECK(geodesic_distance(n, near) == doctest::Approx(1e-9).epsilon(1e-6));
}

TEST_CASE("property: one-parameter group law") {
  for (const ManifoldId& m : kManifolds)
    for (int trial = 0; trial < 50; ++trial) {
      const Point x = random_point(m);
      const double s = uniform(-4, 4), t = uniform(-4, 4);
      for (int j = 1; j <= m.dim_d(); ++j) {
        const Point two = flow(m, GeneratorId{j}, s, flow(m, GeneratorId{j}, t, x));
        const Point one = flow(m, GeneratorId{j}, s + t, x);
        CHECK(geodesic_distance(two, one) < 1e-12);
      }
    }
}

TEST_CASE("property: motions are isometries and flows are group elements") {
  for (const ManifoldId& m : kManifolds)
    for (int trial = 0; trial < 50; ++trial) {
      const Point x = random_point(m), y = random_point(m);
      const GroupElement g = random_motion(m);
      CHECK(std::abs(geodesic_distance(group_act(g, x), group_act(g, y)) - geodesic_distance(x, y)) < 1e-10);

      const GroupElement h = random_motion(m);
      CHECK(geodesic_distance(group_act(g, group_act(h, x)), group_act(group_compose(g, h), x)) < 1e-12);
      CHECK(geodesic_distance(group_act(g.inverse(), group_act(g, x)), x) < 1e-12);

      const double t = uniform(-3, 3);
      for (int j = 1; j <= m.dim_d(); ++j)
        CHECK(geodesic_distance(flow(m, GeneratorId{j}, t, x), group_act(flow_element(m, GeneratorId{j}, t), x)) < 1e-14);
    }
}

TEST_CASE("origin") {
  CHECK(origin(ManifoldId::sphere())[2] == 1.0);
  CHECK(origin(ManifoldId::circle())[0] == 0.0);
}

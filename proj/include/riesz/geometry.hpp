#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace riesz {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// The three supported homogeneous manifolds: the circle S^1, the flat torus
/// T^m and the round sphere S^2 acted on by SO(3).
enum class ManifoldKind : std::uint8_t { Circle, Torus, Sphere2 };

inline constexpr int kMaxTorusDim = 4;

struct ManifoldId {
  ManifoldKind kind = ManifoldKind::Circle;
  int torus_dim = 0;  // only meaningful for Torus

  static constexpr ManifoldId circle() { return {ManifoldKind::Circle, 0}; }
  static ManifoldId torus(int m);
  static constexpr ManifoldId sphere() { return {ManifoldKind::Sphere2, 0}; }

  /// Manifold dimension m.
  int dim_m() const;
  /// Number of generators d = dim G.
  int dim_d() const;
  /// Invariant measure of the whole manifold (2pi, (2pi)^m, 4pi).
  double measure() const;
  /// Number of stored coordinates of a point (1, m, 3).
  int coord_count() const;

  bool is_sphere() const { return kind == ManifoldKind::Sphere2; }

  std::string name() const;
  static ManifoldId parse(const std::string& name);

  friend bool operator==(const ManifoldId&, const ManifoldId&) = default;
};

/// Angle reduced to [0, 2pi).
double wrap_angle(double t);

/// A point of a supported manifold. Angles are normalized at construction;
/// sphere points are unit vectors.
class Point {
 public:
  Point() = default;

  static Point circle(double angle);
  static Point torus(std::span<const double> angles);
  static Point sphere(double x, double y, double z);
  static Point sphere_polar(double theta, double phi);

  const ManifoldId& manifold() const { return manifold_; }
  int size() const { return manifold_.coord_count(); }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& raw() const { return c_; }

 private:
  ManifoldId manifold_{};
  std::array<double, 4> c_{};
};

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat_identity();
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 mat_transpose(const Mat3& a);
double mat_det(const Mat3& a);
/// Rotation by angle t about coordinate axis `axis` (1, 2 or 3). Positive t
/// carries e_j toward e_k for (axis, j, k) cyclic, which is the flow of
/// D_axis = x_j d_k - x_k d_j.
Mat3 axis_rotation(int axis, double t);
/// ZYZ Euler rotation Rz(alpha) Ry(beta) Rz(gamma).
Mat3 euler_zyz(double alpha, double beta, double gamma);

/// A motion of the manifold: an angle shift on S^1 / T^m or a rotation matrix
/// on S^2.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const ManifoldId& manifold);
  static GroupElement shift(const ManifoldId& manifold, std::span<const double> s);
  /// Throws unless the matrix is orthogonal with determinant +1 within 1e-10.
  static GroupElement rotation(const Mat3& r);

  const ManifoldId& manifold() const { return manifold_; }
  const std::array<double, 4>& shift_vector() const { return shift_; }
  const Mat3& matrix() const { return rot_; }

  GroupElement inverse() const;

 private:
  ManifoldId manifold_{};
  std::array<double, 4> shift_{};
  Mat3 rot_ = mat_identity();
};

/// Index of a generator X_j, 1-based as in D_1..D_d.
struct GeneratorId {
  int j = 1;
  void validate(const ManifoldId& manifold) const;
};

/// exp(t X_j) as a group element.
GroupElement flow_element(const ManifoldId& manifold, GeneratorId j, double t);
/// exp(t X_j) . x
Point flow(const ManifoldId& manifold, GeneratorId j, double t, const Point& x);
/// g . x
Point group_act(const GroupElement& g, const Point& x);
/// g1 g2; sphere products are re-orthogonalized when drift exceeds 1e-12.
GroupElement group_compose(const GroupElement& g1, const GroupElement& g2);
/// Geodesic distance for the round metrics (wrapped Euclidean on tori).
double geodesic_distance(const Point& x, const Point& y);

/// The origin o: angle 0 on S^1 / T^m, the north pole on S^2.
Point origin(const ManifoldId& manifold);

}  // namespace riesz

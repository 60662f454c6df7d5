#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glued {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Global geometric tolerance (default 1e-9).
double epsilon();
void set_epsilon(double eps);

/// center + u cos(theta) + v sin(theta), traversed with increasing theta when
/// orientation is +1 and decreasing theta when it is -1.
struct Ellipse {
  Vec3 center = Vec3::Zero();
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
  int orientation = 1;

  Vec3 point(double theta) const;
  /// Derivative with respect to theta (ignores orientation).
  Vec3 derivative(double theta) const;
  /// Tangent in the direction of travel.
  Vec3 tangent(double theta) const { return orientation * derivative(theta); }
  Vec3 unit_normal() const;
  Ellipse translated(const Vec3& t) const;
  Ellipse reversed() const;
  /// Largest semi-axis length.
  double major_radius() const;
  double minor_radius() const;
  /// Solves q - center = a u + b v in the plane (least squares).
  Vec2 plane_coords(const Vec3& q) const;

  /// Circle of the given radius in the plane through `center` with normal `n`.
  static Ellipse circle(const Vec3& center, const Vec3& n, double radius, int orientation = 1);
};

/// Throws Degenerate unless u and v are independent.
void check_ellipse(const Ellipse& e);

struct Plane {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
};

Plane plane_of(const Ellipse& e);

struct SectionPoint {
  Vec3 point;
  double theta = 0.0;
  bool tangential = false;
};

/// Points of e on the plane, parameters in [0, 2pi). Throws Coplanar.
std::vector<SectionPoint> plane_section(const Ellipse& e, const Plane& p);

/// Strict interior membership. Throws OffPlane when q is not on e's plane.
bool interior_contains(const Ellipse& e, const Vec3& q);

struct GlueContact {
  Vec3 point;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

struct PairClassification {
  std::vector<GlueContact> glue_points;
  int pierce_1_by_2 = 0;  // points of e2 inside the disk of e1
  int pierce_2_by_1 = 0;
  bool linked = false;
};

/// Throws Coplanar, Degenerate.
PairClassification classify_pair(const Ellipse& e1, const Ellipse& e2);

/// Signed linking number from crossing signs in a generic projection.
/// Throws NotDisjoint.
int linking_number(const Ellipse& e1, const Ellipse& e2);

/// Whether the two open disks are disjoint (plane-line chord test).
/// Throws PreconditionViolated when either curve pierces the other's disk
/// or the curves meet.
bool interiors_disjoint(const Ellipse& e1, const Ellipse& e2);

/// Roots in [0, 2pi) of a0 + a1 cos t + b1 sin t + a2 cos 2t + b2 sin 2t.
struct TrigQuadratic {
  double a0 = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  double operator()(double t) const;
  double derivative(double t) const;
};

struct TrigRoots {
  std::vector<double> roots;
  /// Near-double root or near-real complex pair: the count is not robust.
  bool ambiguous = false;
};

TrigRoots solve_trig_quadratic(const TrigQuadratic& f);

/// Image frame: e1 x e2 = direction.
struct Frame {
  Vec3 direction = Vec3::UnitZ();
  Vec3 e1 = Vec3::UnitX();
  Vec3 e2 = Vec3::UnitY();

  static Frame from_direction(const Vec3& d);
  Vec2 image(const Vec3& x) const { return {e1.dot(x), e2.dot(x)}; }
  double depth(const Vec3& x) const { return direction.dot(x); }
};

/// Intersection of the images of two ellipses: parameter on each.
struct ImageCrossing {
  double theta_a = 0.0;
  double theta_b = 0.0;
};

struct ImageCrossings {
  std::vector<ImageCrossing> crossings;
  bool ambiguous = false;
};

/// Throws NonGenericProjection when an image degenerates to a segment.
ImageCrossings image_crossings(const Ellipse& a, const Ellipse& b, const Frame& f);

/// Smallest t > 0 at which `moving` translated by t*w meets `fixed`, with the
/// contact point and the parameters on each ellipse (theta on the translated
/// moving ellipse, phi on the fixed one).
struct Contact {
  double t = 0.0;
  double theta_moving = 0.0;
  double phi_fixed = 0.0;
  bool ambiguous = false;
};
std::optional<Contact> first_contact(const Ellipse& moving, const Ellipse& fixed, const Vec3& w);

/// All contact times (sorted) along w, for detecting simultaneous touches.
std::vector<Contact> contacts_along(const Ellipse& moving, const Ellipse& fixed, const Vec3& w);

/// Parameters (s on e1, t on e2) of the closest pair of points.
std::pair<double, double> closest_params(const Ellipse& e1, const Ellipse& e2);

/// Rigid motion x -> R x + t.
struct RigidMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();
  Vec3 apply(const Vec3& x) const { return rotation * x + translation; }
  Ellipse apply(const Ellipse& e) const;
};

std::string format_ellipse(const Ellipse& e);
Ellipse parse_ellipse(const std::string& line);

}  // namespace glued

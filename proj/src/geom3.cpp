#include "glued/geom3.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "glued/error.hpp"

namespace glued {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
std::atomic<double> g_epsilon{1e-9};

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

double scale_of(const Ellipse& e) { return std::max({1.0, e.u.norm(), e.v.norm()}); }

double det2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Coordinates (a, b) of a vector in span(u, v), least squares.
struct PlaneBasis {
  Eigen::Matrix<double, 2, 3> dual;
  explicit PlaneBasis(const Ellipse& e) {
    Eigen::Matrix<double, 3, 2> b;
    b.col(0) = e.u;
    b.col(1) = e.v;
    dual = (b.transpose() * b).inverse() * b.transpose();
  }
  Vec2 operator()(const Vec3& x) const { return dual * x; }
};

// |w + p cos t + q sin t|^2 - 1
TrigQuadratic unit_circle_condition(const Vec2& w, const Vec2& p, const Vec2& q) {
  TrigQuadratic f;
  f.a0 = w.squaredNorm() + 0.5 * (p.squaredNorm() + q.squaredNorm()) - 1.0;
  f.a1 = 2.0 * w.dot(p);
  f.b1 = 2.0 * w.dot(q);
  f.a2 = 0.5 * (p.squaredNorm() - q.squaredNorm());
  f.b2 = p.dot(q);
  return f;
}

}  // namespace

double epsilon() { return g_epsilon.load(); }

void set_epsilon(double eps) {
  if (!(eps > 0.0) || eps > 1e-2) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1e-2]");
  g_epsilon.store(eps);
}

Vec3 Ellipse::point(double theta) const { return center + u * std::cos(theta) + v * std::sin(theta); }

Vec3 Ellipse::derivative(double theta) const { return -u * std::sin(theta) + v * std::cos(theta); }

Vec3 Ellipse::unit_normal() const { return u.cross(v).normalized(); }

Ellipse Ellipse::translated(const Vec3& t) const {
  Ellipse e = *this;
  e.center += t;
  return e;
}

Ellipse Ellipse::reversed() const {
  Ellipse e = *this;
  e.orientation = -orientation;
  return e;
}

namespace {
std::pair<double, double> semi_axes(const Ellipse& e) {
  Eigen::Matrix2d g;
  g << e.u.dot(e.u), e.u.dot(e.v), e.u.dot(e.v), e.v.dot(e.v);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(g);
  return {std::sqrt(std::max(0.0, es.eigenvalues()(0))), std::sqrt(std::max(0.0, es.eigenvalues()(1)))};
}
}  // namespace

double Ellipse::major_radius() const { return semi_axes(*this).second; }
double Ellipse::minor_radius() const { return semi_axes(*this).first; }

Vec2 Ellipse::plane_coords(const Vec3& q) const { return PlaneBasis(*this)(q - center); }

Ellipse Ellipse::circle(const Vec3& c, const Vec3& n, double radius, int orientation) {
  const Vec3 nn = n.normalized();
  const Vec3 helper = std::abs(nn.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 a = (helper - helper.dot(nn) * nn).normalized();
  const Vec3 b = nn.cross(a);
  return Ellipse{c, radius * a, radius * b, orientation};
}

void check_ellipse(const Ellipse& e) {
  if (e.orientation != 1 && e.orientation != -1) throw Error(ErrorKind::Degenerate, "orientation must be +1 or -1");
  if (!e.center.allFinite() || !e.u.allFinite() || !e.v.allFinite()) {
    throw Error(ErrorKind::Degenerate, "non-finite ellipse coordinates");
  }
  if (e.u.cross(e.v).norm() <= 1e3 * epsilon() * scale_of(e) * scale_of(e)) {
    throw Error(ErrorKind::Degenerate, "spanning vectors are dependent");
  }
}

Plane plane_of(const Ellipse& e) { return Plane{e.center, e.unit_normal()}; }

std::vector<SectionPoint> plane_section(const Ellipse& e, const Plane& p) {
  const Vec3 n = p.normal.normalized();
  const double A = n.dot(e.u);
  const double B = n.dot(e.v);
  const double C = n.dot(e.center - p.point);
  const double R = std::hypot(A, B);
  const double eps = epsilon();
  const double s = scale_of(e);
  if (R <= eps * s) {
    if (std::abs(C) <= eps * s) throw Error(ErrorKind::Coplanar, "ellipse lies in the plane");
    return {};
  }
  const double rho = -C / R;
  const double base = std::atan2(B, A);
  std::vector<SectionPoint> out;
  if (std::abs(1.0 - std::abs(rho)) < 10.0 * eps) {
    const double th = wrap(base + (rho > 0 ? 0.0 : std::numbers::pi));
    out.push_back({e.point(th), th, true});
    return out;
  }
  if (std::abs(rho) > 1.0) return out;
  const double d = std::acos(rho);
  for (double th : {wrap(base - d), wrap(base + d)}) out.push_back({e.point(th), th, false});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.theta < y.theta; });
  return out;
}

bool interior_contains(const Ellipse& e, const Vec3& q) {
  const double dist = std::abs(e.unit_normal().dot(q - e.center));
  if (dist > 1e3 * epsilon() * scale_of(e)) throw Error(ErrorKind::OffPlane, "point is not on the ellipse plane");
  return e.plane_coords(q).squaredNorm() < 1.0 - epsilon();
}

namespace {

struct SideResult {
  std::vector<GlueContact> glue;  // theta1 on the disk owner, theta2 on the piercing curve
  int pierce = 0;
};

// Points of `curve` on the plane of `disk`, sorted into glue / interior / exterior.
SideResult classify_side(const Ellipse& disk, const Ellipse& curve) {
  SideResult r;
  const double eps = epsilon();
  for (const SectionPoint& sp : plane_section(curve, plane_of(disk))) {
    const Vec2 ab = disk.plane_coords(sp.point);
    const double r2 = ab.squaredNorm();
    const double gap = std::abs(r2 - 1.0);
    if (sp.tangential && r2 < 1.0 + 10.0 * eps) {
      throw Error(ErrorKind::Degenerate, "curve touches the other ellipse's plane tangentially inside its disk");
    }
    if (gap < eps) {
      r.glue.push_back({sp.point, wrap(std::atan2(ab.y(), ab.x())), sp.theta});
    } else if (gap < 10.0 * eps) {
      throw Error(ErrorKind::Degenerate, "section point within tolerance of the curve");
    } else if (r2 < 1.0) {
      ++r.pierce;
    }
  }
  return r;
}

}  // namespace

PairClassification classify_pair(const Ellipse& e1, const Ellipse& e2) {
  check_ellipse(e1);
  check_ellipse(e2);
  const SideResult s1 = classify_side(e1, e2);  // e2 through the disk of e1
  const SideResult s2 = classify_side(e2, e1);
  if (s1.glue.size() != s2.glue.size()) {
    throw Error(ErrorKind::Degenerate, "curve contact detected on one side only");
  }
  PairClassification pc;
  pc.glue_points = s1.glue;
  pc.pierce_1_by_2 = s1.pierce;
  pc.pierce_2_by_1 = s2.pierce;
  pc.linked = pc.glue_points.empty() && pc.pierce_1_by_2 % 2 == 1 && pc.pierce_2_by_1 % 2 == 1;
  return pc;
}

double TrigQuadratic::operator()(double t) const {
  return a0 + a1 * std::cos(t) + b1 * std::sin(t) + a2 * std::cos(2 * t) + b2 * std::sin(2 * t);
}

double TrigQuadratic::derivative(double t) const {
  return -a1 * std::sin(t) + b1 * std::cos(t) - 2 * a2 * std::sin(2 * t) + 2 * b2 * std::cos(2 * t);
}

TrigRoots solve_trig_quadratic(const TrigQuadratic& f) {
  TrigRoots out;
  const double scale = std::max({std::abs(f.a0), std::abs(f.a1), std::abs(f.b1), std::abs(f.a2), std::abs(f.b2)});
  if (scale == 0.0) {
    out.ambiguous = true;
    return out;
  }
  // Rotate so that tau = pi (s = infinity) is far from a root.
  double phi0 = 0.0, best = -1.0;
  for (int k = 0; k < 16; ++k) {
    const double phi = k * std::numbers::pi / 8.0;
    const double val = std::abs(f(phi + std::numbers::pi));
    if (val > best) {
      best = val;
      phi0 = phi;
    }
  }
  if (best < 1e-12 * scale) {
    out.ambiguous = true;
    return out;
  }
  const double c1 = std::cos(phi0), s1 = std::sin(phi0), c2 = std::cos(2 * phi0), s2 = std::sin(2 * phi0);
  const double A0 = f.a0;
  const double A1 = f.a1 * c1 + f.b1 * s1;
  const double B1 = -f.a1 * s1 + f.b1 * c1;
  const double A2 = f.a2 * c2 + f.b2 * s2;
  const double B2 = -f.a2 * s2 + f.b2 * c2;
  const std::array<double, 5> c{A0 + A1 + A2, 2 * B1 + 4 * B2, 2 * A0 - 6 * A2, 2 * B1 - 4 * B2, A0 - A1 + A2};
  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  for (int i = 1; i < 4; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < 4; ++i) comp(i, 3) = -c[i] / c[4];
  Eigen::EigenSolver<Eigen::Matrix4d> es(comp, false);
  std::vector<double> roots;
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> lam = es.eigenvalues()(i);
    if (lam.imag() != 0.0) {
      if (std::abs(lam.imag()) < 1e-6 * (1.0 + std::abs(lam))) out.ambiguous = true;
      continue;
    }
    double t = phi0 + 2.0 * std::atan(lam.real());
    for (int it = 0; it < 3; ++it) {
      const double d = f.derivative(t);
      if (std::abs(d) < 1e-12 * scale) break;
      t -= f(t) / d;
    }
    if (std::abs(f.derivative(t)) < 1e-7 * scale) out.ambiguous = true;
    roots.push_back(wrap(t));
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double next = i + 1 < roots.size() ? roots[i + 1] : roots[0] + kTwoPi;
    if (roots.size() > 1 && next - roots[i] < 1e-6) out.ambiguous = true;
  }
  out.roots = std::move(roots);
  return out;
}

Frame Frame::from_direction(const Vec3& d) {
  Frame f;
  f.direction = d.normalized();
  const Vec3& dd = f.direction;
  Vec3 helper = Vec3::UnitX();
  if (std::abs(dd.y()) < std::abs(dd.x()) && std::abs(dd.y()) <= std::abs(dd.z())) helper = Vec3::UnitY();
  if (std::abs(dd.z()) < std::abs(dd.x()) && std::abs(dd.z()) < std::abs(dd.y())) helper = Vec3::UnitZ();
  f.e1 = (helper - helper.dot(dd) * dd).normalized();
  f.e2 = dd.cross(f.e1);
  return f;
}

ImageCrossings image_crossings(const Ellipse& a, const Ellipse& b, const Frame& f) {
  Eigen::Matrix2d m;
  m.col(0) = f.image(a.u);
  m.col(1) = f.image(a.v);
  for (const Ellipse* e : {&a, &b}) {
    const double s = std::abs(e->unit_normal().dot(f.direction));
    if (s < 1e-5) throw Error(ErrorKind::NonGenericProjection, "ellipse seen edge-on");
  }
  const Eigen::Matrix2d inv = m.inverse();
  const Vec2 w = inv * (f.image(b.center) - f.image(a.center));
  const Vec2 p = inv * f.image(b.u);
  const Vec2 q = inv * f.image(b.v);
  const TrigRoots r = solve_trig_quadratic(unit_circle_condition(w, p, q));
  ImageCrossings out;
  out.ambiguous = r.ambiguous;
  for (double t : r.roots) {
    const Vec2 x = w + p * std::cos(t) + q * std::sin(t);
    out.crossings.push_back({wrap(std::atan2(x.y(), x.x())), t});
  }
  return out;
}

namespace {

const std::array<Vec3, 6> kLinkingDirections{
    Vec3(0.2917, 0.5331, 0.7941), Vec3(-0.6143, 0.3217, 0.7205), Vec3(0.4421, -0.8012, 0.4033),
    Vec3(0.8311, 0.2287, -0.5069), Vec3(-0.1733, -0.3791, 0.9090), Vec3(0.7071, 0.6083, 0.3604)};

std::optional<int> linking_in_direction(const Ellipse& e1, const Ellipse& e2, const Vec3& dir) {
  const Frame f = Frame::from_direction(dir);
  ImageCrossings ic;
  try {
    ic = image_crossings(e1, e2, f);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (ic.ambiguous) return std::nullopt;
  int total = 0;
  const double tol = 1e3 * epsilon() * std::max(scale_of(e1), scale_of(e2));
  for (const auto& c : ic.crossings) {
    const Vec3 p1 = e1.point(c.theta_a), p2 = e2.point(c.theta_b);
    const double gap = f.depth(p1) - f.depth(p2);
    if ((p1 - p2).norm() < tol) throw Error(ErrorKind::NotDisjoint, "curves meet");
    if (std::abs(gap) < tol) return std::nullopt;
    const Vec2 t1 = f.image(e1.tangent(c.theta_a)), t2 = f.image(e2.tangent(c.theta_b));
    const double d = gap > 0 ? det2(t1, t2) : det2(t2, t1);
    total += d > 0 ? 1 : -1;
  }
  if (total % 2 != 0) return std::nullopt;
  return total / 2;
}

}  // namespace

int linking_number(const Ellipse& e1, const Ellipse& e2) {
  std::optional<int> first;
  for (const Vec3& d : kLinkingDirections) {
    const auto lk = linking_in_direction(e1, e2, d);
    if (!lk) continue;
    if (!first) {
      first = lk;
      continue;
    }
    if (*lk != *first) throw Error(ErrorKind::InternalInconsistency, "linking number depends on the projection");
    return *first;
  }
  if (first) return *first;
  throw Error(ErrorKind::NonGenericProjection, "no generic direction for the linking number");
}

bool interiors_disjoint(const Ellipse& e1, const Ellipse& e2) {
  const PairClassification pc = classify_pair(e1, e2);
  if (!pc.glue_points.empty() || pc.pierce_1_by_2 != 0 || pc.pierce_2_by_1 != 0) {
    throw Error(ErrorKind::PreconditionViolated, "interiors_disjoint needs disjoint, unpierced ellipses");
  }
  const Vec3 n1 = e1.unit_normal(), n2 = e2.unit_normal();
  const Vec3 l = n1.cross(n2);
  if (l.norm() < 1e-12) return true;  // parallel distinct planes
  Eigen::Matrix3d m;
  m.row(0) = n1;
  m.row(1) = n2;
  m.row(2) = l;
  const Vec3 x0 = m.colPivHouseholderQr().solve(Vec3(n1.dot(e1.center), n2.dot(e2.center), 0.0));
  const Vec3 dir = l.normalized();
  // Interval of s with x0 + s dir strictly inside the disk.
  auto chord = [&](const Ellipse& e) -> std::optional<std::pair<double, double>> {
    const Vec2 a = e.plane_coords(x0);
    const Vec2 b = PlaneBasis(e)(dir);
    const double qa = b.squaredNorm(), qb = 2 * a.dot(b), qc = a.squaredNorm() - 1.0;
    const double disc = qb * qb - 4 * qa * qc;
    if (disc <= 0) return std::nullopt;
    const double r = std::sqrt(disc);
    return std::make_pair((-qb - r) / (2 * qa), (-qb + r) / (2 * qa));
  };
  const auto c1 = chord(e1), c2 = chord(e2);
  if (!c1 || !c2) return true;
  return std::min(c1->second, c2->second) <= std::max(c1->first, c2->first);
}

std::vector<Contact> contacts_along(const Ellipse& moving, const Ellipse& fixed, const Vec3& w) {
  const Vec3 nm = moving.unit_normal(), nf = fixed.unit_normal();
  const double wm = nm.dot(w), wf = nf.dot(w);
  std::vector<Contact> out;
  const double tmin = 1e3 * epsilon() * std::max(scale_of(moving), scale_of(fixed)) / std::max(w.norm(), 1e-300);
  if (std::abs(wm) >= std::abs(wf)) {
    if (std::abs(wm) < 1e-12 * w.norm()) return out;
    // Fixed point F(phi) - t w lies on the plane of the moving ellipse.
    const PlaneBasis pb(moving);
    const double t0 = nm.dot(fixed.center - moving.center) / wm;
    const double tu = nm.dot(fixed.u) / wm, tv = nm.dot(fixed.v) / wm;
    const Vec2 cw = pb(fixed.center - moving.center - t0 * w);
    const Vec2 p = pb(fixed.u - tu * w), q = pb(fixed.v - tv * w);
    const TrigRoots r = solve_trig_quadratic(unit_circle_condition(cw, p, q));
    for (double phi : r.roots) {
      const double t = t0 + tu * std::cos(phi) + tv * std::sin(phi);
      const Vec2 ab = cw + p * std::cos(phi) + q * std::sin(phi);
      out.push_back({t, wrap(std::atan2(ab.y(), ab.x())), phi, r.ambiguous});
    }
  } else {
    if (std::abs(wf) < 1e-12 * w.norm()) return out;
    // Moving point M(theta) + t w lies on the plane of the fixed ellipse.
    const PlaneBasis pb(fixed);
    const double t0 = nf.dot(fixed.center - moving.center) / wf;
    const double tu = -nf.dot(moving.u) / wf, tv = -nf.dot(moving.v) / wf;
    const Vec2 cw = pb(moving.center + t0 * w - fixed.center);
    const Vec2 p = pb(moving.u + tu * w), q = pb(moving.v + tv * w);
    const TrigRoots r = solve_trig_quadratic(unit_circle_condition(cw, p, q));
    for (double theta : r.roots) {
      const double t = t0 + tu * std::cos(theta) + tv * std::sin(theta);
      const Vec2 ab = cw + p * std::cos(theta) + q * std::sin(theta);
      out.push_back({t, theta, wrap(std::atan2(ab.y(), ab.x())), r.ambiguous});
    }
  }
  std::erase_if(out, [&](const Contact& c) { return c.t <= tmin; });
  std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) { return a.t < b.t; });
  return out;
}

std::optional<Contact> first_contact(const Ellipse& moving, const Ellipse& fixed, const Vec3& w) {
  auto all = contacts_along(moving, fixed, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::pair<double, double> closest_params(const Ellipse& e1, const Ellipse& e2) {
  constexpr int kGrid = 96;
  double best = std::numeric_limits<double>::infinity();
  double bs = 0, bt = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double s = kTwoPi * i / kGrid;
    const Vec3 p = e1.point(s);
    for (int j = 0; j < kGrid; ++j) {
      const double t = kTwoPi * j / kGrid;
      const double d = (p - e2.point(t)).squaredNorm();
      if (d < best) {
        best = d;
        bs = s;
        bt = t;
      }
    }
  }
  for (int it = 0; it < 50; ++it) {
    const Vec3 diff = e1.point(bs) - e2.point(bt);
    const Vec3 p1 = e1.derivative(bs), q1 = e2.derivative(bt);
    const Vec3 p2 = -(e1.point(bs) - e1.center), q2 = -(e2.point(bt) - e2.center);
    const double gs = diff.dot(p1), gt = -diff.dot(q1);
    Eigen::Matrix2d h;
    h << p1.dot(p1) + diff.dot(p2), -p1.dot(q1), -p1.dot(q1), q1.dot(q1) - diff.dot(q2);
    Eigen::Vector2d step = h.ldlt().solve(Eigen::Vector2d(gs, gt));
    if (!step.allFinite() || h.determinant() <= 0) step = 0.1 * Eigen::Vector2d(gs, gt);
    bs -= step(0);
    bt -= step(1);
    if (step.norm() < 1e-15) break;
  }
  return {wrap(bs), wrap(bt)};
}

Ellipse RigidMotion::apply(const Ellipse& e) const {
  return Ellipse{apply(e.center), rotation * e.u, rotation * e.v, e.orientation};
}

std::string format_ellipse(const Ellipse& e) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "ellipse %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g %+d", e.center.x(),
                e.center.y(), e.center.z(), e.u.x(), e.u.y(), e.u.z(), e.v.x(), e.v.y(), e.v.z(), e.orientation);
  return buf;
}

Ellipse parse_ellipse(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  if (word != "ellipse") throw Error(ErrorKind::ParseError, "expected 'ellipse': " + line);
  std::array<double, 9> x{};
  for (double& d : x) {
    std::string tok;
    if (!(in >> tok)) throw Error(ErrorKind::ParseError, "ellipse line needs 9 numbers and an orientation: " + line);
    try {
      std::size_t used = 0;
      d = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad number '" + tok + "'");
    }
  }
  std::string o;
  if (!(in >> o) || (o != "+1" && o != "-1" && o != "1")) {
    throw Error(ErrorKind::ParseError, "orientation must be +1 or -1: " + line);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "trailing text on ellipse line: " + line);
  Ellipse e{Vec3(x[0], x[1], x[2]), Vec3(x[3], x[4], x[5]), Vec3(x[6], x[7], x[8]), o == "-1" ? -1 : 1};
  check_ellipse(e);
  return e;
}

}  // namespace glued

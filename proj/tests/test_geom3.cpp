#include <doctest.h>

#include <random>

#include "glued/error.hpp"
#include "glued/geom3.hpp"
#include "oracles.hpp"

using namespace glued;

namespace {

Ellipse random_ellipse(std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> len(0.4, 1.2);
  const Vec3 c = spread * Vec3(n(rng), n(rng), n(rng));
  for (;;) {
    const Vec3 u = len(rng) * Vec3(n(rng), n(rng), n(rng)).normalized();
    const Vec3 v = len(rng) * Vec3(n(rng), n(rng), n(rng)).normalized();
    if (u.cross(v).norm() > 0.3 * u.norm() * v.norm()) return Ellipse{c, u, v, rng() % 2 ? 1 : -1};
  }
}

int sign_changes(const TrigQuadratic& f, int n = 20000) {
  int count = 0;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * M_PI * k / n, b = 2 * M_PI * (k + 1) / n;
    if ((f(a) > 0) != (f(b) > 0)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("trig quadratic roots match a dense sign-change count") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const TrigQuadratic f{n(rng), n(rng), n(rng), n(rng), n(rng)};
    const TrigRoots r = solve_trig_quadratic(f);
    if (r.ambiguous) continue;
    CHECK(static_cast<int>(r.roots.size()) == sign_changes(f));
    for (double t : r.roots) CHECK(std::abs(f(t)) < 1e-9);
  }
}

TEST_CASE("plane section and interior of a circle") {
  const Ellipse c = Ellipse::circle(Vec3::Zero(), Vec3::UnitZ(), 1.0);
  const auto pts = plane_section(c, Plane{Vec3::Zero(), Vec3::UnitX()});
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) CHECK(std::abs(std::abs(p.point.y()) - 1.0) < 1e-12);
  CHECK(interior_contains(c, Vec3(0.5, 0.2, 0)));
  CHECK_FALSE(interior_contains(c, Vec3(1.5, 0, 0)));
  CHECK_THROWS_AS(interior_contains(c, Vec3(0, 0, 0.5)), Error);
  CHECK_THROWS_AS(plane_section(c, Plane{Vec3::Zero(), Vec3::UnitZ()}), Error);
}

TEST_CASE("Hopf circles are linked and pierce each other once") {
  const Ellipse a = Ellipse::circle(Vec3::Zero(), Vec3::UnitZ(), 1.0);
  const Ellipse b = Ellipse::circle(Vec3(1, 0, 0), Vec3::UnitY(), 1.0);
  const auto pc = classify_pair(a, b);
  CHECK(pc.glue_points.empty());
  CHECK(pc.pierce_1_by_2 == 1);
  CHECK(pc.pierce_2_by_1 == 1);
  CHECK(pc.linked);
  CHECK(std::abs(linking_number(a, b)) == 1);
  CHECK(linking_number(a, b) == oracle::gauss_linking(a, b));
}

TEST_CASE("linking number agrees with the Gauss integral") {
  std::mt19937_64 rng(5);
  int linked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Ellipse a = random_ellipse(rng, 0.4), b = random_ellipse(rng, 0.4);
    if (oracle::min_distance(a, b, 400) < 0.05) continue;
    const int lk = linking_number(a, b);
    CHECK(lk == oracle::gauss_linking(a, b));
    CHECK(oracle::disk_linking(a, b) == oracle::gauss_linking(a, b));
    linked += lk != 0;
  }
  CHECK(linked > 0);
}

TEST_CASE("image crossings match a polyline intersection count") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Ellipse a = random_ellipse(rng, 0.5), b = random_ellipse(rng, 0.5);
    const Vec3 d = Vec3(n(rng), n(rng), n(rng)).normalized();
    const auto ic = image_crossings(a, b, Frame::from_direction(d));
    if (ic.ambiguous) continue;
    CHECK(static_cast<int>(ic.crossings.size()) == oracle::image_crossing_count(a, b, d));
  }
}

TEST_CASE("frame is right handed") {
  const Frame f = Frame::from_direction(Vec3(0.3, -0.2, 0.9));
  CHECK((f.e1.cross(f.e2) - f.direction).norm() < 1e-12);
  CHECK(std::abs(f.direction.norm() - 1.0) < 1e-12);
}

TEST_CASE("first contact brings the curves into touch") {
  std::mt19937_64 rng(3);
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Ellipse fixed = random_ellipse(rng, 0.0);
    const Ellipse moving = random_ellipse(rng, 0.0).translated(Vec3(2.5, 0.3, -0.2));
    const Vec3 w = fixed.center - moving.center;
    const auto c = first_contact(moving, fixed, w);
    if (!c || c->ambiguous) continue;
    ++found;
    const Ellipse moved = moving.translated(c->t * w);
    CHECK((moved.point(c->theta_moving) - fixed.point(c->phi_fixed)).norm() < 1e-8);
    // No earlier contact: every listed contact time is at least t.
    for (const auto& other : contacts_along(moving, fixed, w)) CHECK(other.t >= c->t - 1e-12);
  }
  CHECK(found > 10);
}

TEST_CASE("closest params give the sampled minimum distance") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Ellipse a = random_ellipse(rng, 1.0), b = random_ellipse(rng, 1.0);
    const auto [s, t] = closest_params(a, b);
    const double d = (a.point(s) - b.point(t)).norm();
    CHECK(d <= oracle::min_distance(a, b, 800) + 1e-9);
  }
}

TEST_CASE("ellipse text round trip is exact") {
  const Ellipse e{Vec3(0.1, -2.0 / 3.0, 1e-7), Vec3(1.0 / 3.0, 0.2, 0.0), Vec3(0.0, 0.7, std::sqrt(2.0)), -1};
  const Ellipse f = parse_ellipse(format_ellipse(e));
  CHECK(f.center == e.center);
  CHECK(f.u == e.u);
  CHECK(f.v == e.v);
  CHECK(f.orientation == e.orientation);
  CHECK_THROWS_AS(parse_ellipse("ellipse 1 2 3"), Error);
}

TEST_CASE("degenerate ellipses are rejected") {
  CHECK_THROWS_AS(check_ellipse(Ellipse{Vec3::Zero(), Vec3::UnitX(), 2 * Vec3::UnitX(), 1}), Error);
}

TEST_CASE("epsilon is bounded") {
  const double old = epsilon();
  CHECK_THROWS_AS(set_epsilon(0.0), Error);
  CHECK_THROWS_AS(set_epsilon(0.5), Error);
  set_epsilon(1e-8);
  CHECK(epsilon() == 1e-8);
  set_epsilon(old);
}

#include <doctest.h>

#include <functional>
#include <sstream>

#include "glued/config.hpp"
#include "glued/error.hpp"
#include "oracles.hpp"

using namespace glued;

namespace {

// Two unit circles touching transversally at (1, 0, 0).
std::vector<Ellipse> touching_pair() {
  return {Ellipse::circle(Vec3::Zero(), Vec3::UnitZ(), 1.0), Ellipse::circle(Vec3(2, 0, 0), Vec3::UnitY(), 1.0)};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("validate accepts a touching pair") {
  const auto cfg = validate(touching_pair(), {{0, 1}});
  REQUIRE(cfg.glue_points.size() == 1);
  CHECK((cfg.glue_points.at({0, 1}).point - Vec3(1, 0, 0)).norm() < 1e-9);
  CHECK(cfg.degree() == 4);
}

TEST_CASE("validate error kinds") {
  auto es = touching_pair();
  CHECK(kind_of([&] { validate(es, {}); }) == ErrorKind::NotATree);
  CHECK(kind_of([&] { validate(es, {{0, 1}, {1, 0}}); }) == ErrorKind::NotATree);
  CHECK(kind_of([&] { validate(es, {{0, 0}}); }) == ErrorKind::NotATree);
  // Glued pair listed but not touching.
  auto apart = es;
  apart[1] = apart[1].translated(Vec3(0.5, 0, 0));
  CHECK(kind_of([&] { validate(apart, {{0, 1}}); }) == ErrorKind::MissingGluePoint);
  // Non-glued pair meeting: a third circle crossing ellipse 0 twice.
  es.push_back(Ellipse::circle(Vec3::Zero(), Vec3::UnitX(), 1.0));
  CHECK(kind_of([&] { validate(es, {{0, 1}, {1, 2}}); }) == ErrorKind::UnexpectedIntersection);
  // Coplanar circles.
  std::vector<Ellipse> flat = {Ellipse::circle(Vec3::Zero(), Vec3::UnitZ(), 1.0),
                               Ellipse::circle(Vec3(3, 0, 0), Vec3::UnitZ(), 1.0)};
  CHECK_THROWS_AS(validate(flat, {{0, 1}}), Error);
  // Degenerate ellipse.
  std::vector<Ellipse> degenerate = {Ellipse{Vec3::Zero(), Vec3::UnitX(), 2 * Vec3::UnitX(), 1}};
  CHECK(kind_of([&] { validate(degenerate, {}); }) == ErrorKind::Degenerate);
}

TEST_CASE("random configurations are valid trees and deterministic") {
  for (int m = 1; m <= 5; ++m) {
    const auto a = random_config(m, 100 + m);
    const auto b = random_config(m, 100 + m);
    CHECK(a.size() == m);
    CHECK(static_cast<int>(a.edges.size()) == m - 1);
    CHECK(format_config(a) == format_config(b));
    std::istringstream in(format_config(a));
    const auto c = parse_config(in);
    CHECK(format_config(c) == format_config(a));
    const auto cl = random_config(m, 200 + m, SampleStrategy::Cluster);
    CHECK(cl.size() == m);
  }
}

TEST_CASE("smoothing covers every ellipse once") {
  for (int m = 1; m <= 4; ++m) {
    const auto cfg = random_config(m, 7 * m);
    const auto curve = smooth(cfg);
    double total = 0.0;
    std::vector<double> per(m, 0.0);
    for (const auto& arc : curve.arcs) {
      total += arc.length;
      per[arc.ellipse] += arc.length;
    }
    CHECK(static_cast<int>(curve.arcs.size()) == (m == 1 ? 1 : 2 * (m - 1)));
    for (double p : per) CHECK(std::abs(p - 2 * M_PI) < 1e-9);
  }
}

TEST_CASE("perturbation signs change the glued pair's linking by one") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto cfg = random_config(2, seed);
    const Vec3 d = Vec3(0.3, 0.5, 0.81).normalized();
    const auto plus = perturb(cfg, {{{0, 1}, 1}}, d);
    const auto minus = perturb(cfg, {{{0, 1}, -1}}, d);
    const int lp = oracle::disk_linking(plus.ellipses[0], plus.ellipses[1]);
    const int lm = oracle::disk_linking(minus.ellipses[0], minus.ellipses[1]);
    CHECK(lp - lm == 1);
    CHECK(linking_matrix(plus.ellipses)[0][1] == lp);
  }
}

TEST_CASE("perturbation keeps the linking of non-glued pairs") {
  const auto cfg = random_config(3, 42);
  const auto summary = summarize(cfg);
  const auto link = perturb(cfg, {{cfg.edges[0], 1}, {cfg.edges[1], -1}}, Vec3(0.1, 0.2, 0.97).normalized());
  for (const auto& [e, lk] : summary.linking) {
    CHECK(oracle::disk_linking(link.ellipses[e.first], link.ellipses[e.second]) == lk);
  }
  CHECK_THROWS_AS(perturb(cfg, {}, Vec3::UnitZ()), Error);
}

TEST_CASE("sweep reproduces the rigid link's linking matrix") {
  for (std::uint64_t seed = 3; seed <= 5; ++seed) {
    const auto cfg = random_config(3, seed);
    SignAssignment s;
    for (const Edge& e : cfg.edges) s[e] = seed % 2 ? 1 : -1;
    const auto link = perturb(cfg, s, Vec3(0.2, -0.3, 0.93).normalized());
    const auto res = sweep_to_preglued(link, Vec3(1, 0.2, 0.1).normalized(), seed);
    CHECK(res.config.size() == 3);
    const auto back = perturb(res.config, res.signs, Vec3(0.7, 0.1, 0.7).normalized());
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        CHECK(oracle::disk_linking(back.ellipses[i], back.ellipses[j]) ==
              oracle::disk_linking(link.ellipses[i], link.ellipses[j]));
      }
    }
  }
}

TEST_CASE("try_attach adds one touching ellipse") {
  std::mt19937_64 rng(8);
  const auto cfg = random_config(2, 8);
  int ok = 0;
  for (int i = 0; i < 50 && ok < 3; ++i) {
    const auto next = try_attach(cfg, 1, rng);
    if (!next) continue;
    ++ok;
    CHECK(next->size() == 3);
    CHECK(next->glue_points.count({1, 2}) == 1);
    CHECK(oracle::min_distance(next->ellipses[1], next->ellipses[2], 800) < 1e-2);
  }
  CHECK(ok > 0);
}

TEST_CASE("parse errors") {
  std::istringstream bad("ellipse 0 0 0 1 0 0 0 1 0 +1\nglue 0 5\n");
  CHECK_THROWS_AS(parse_config(bad), Error);
  std::istringstream junk("circle 1 2 3\n");
  CHECK(kind_of([&] { parse_config(junk); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { load_config("/nonexistent/file.cfg"); }) == ErrorKind::ParseError);
}

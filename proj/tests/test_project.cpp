#include <doctest.h>

#include "glued/config.hpp"
#include "glued/error.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"
#include "oracles.hpp"

using namespace glued;

TEST_CASE("single ellipse projects to the crossingless unknot") {
  const auto cfg = random_config(1, 3);
  const auto p = project_knot_generic(cfg, 1);
  CHECK(p.diagram.crossing_count() == 0);
  CHECK(p.diagram.component_count() == 1);
}

TEST_CASE("link crossings match polyline counts and twice the linking number") {
  const auto cfg = random_config(3, 11);
  const auto link = perturb(cfg, {{cfg.edges[0], 1}, {cfg.edges[1], 1}}, Vec3(0.4, 0.3, 0.87).normalized());
  const auto p = project_link_generic(link.ellipses, 4);
  const auto counts = pair_crossing_counts(p.diagram);
  const auto writhes = pair_writhe(p.diagram);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto it = counts.find({i, j});
      const int c = it == counts.end() ? 0 : it->second;
      CHECK(c == oracle::image_crossing_count(link.ellipses[i], link.ellipses[j], p.spec.frame.direction, 1500));
      const auto w = writhes.find({i, j});
      CHECK((w == writhes.end() ? 0 : w->second) ==
            2 * oracle::disk_linking(link.ellipses[i], link.ellipses[j]));
    }
  }
}

TEST_CASE("knot crossings equal the non-glue image crossings") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto cfg = random_config(3, seed);
    const auto p = project_knot_generic(cfg, seed);
    int expected = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const int c = oracle::image_crossing_count(cfg.ellipses[i], cfg.ellipses[j], p.spec.frame.direction, 1500);
        // The glue point shows up as one transverse image crossing.
        expected += cfg.glue_points.count({i, j}) ? c - 1 : c;
      }
    }
    CHECK(p.diagram.crossing_count() == expected);
    CHECK(p.diagram.crossing_count() % 2 == 0);
  }
}

TEST_CASE("projection is deterministic per seed") {
  const auto cfg = random_config(4, 17);
  CHECK(project_knot_generic(cfg, 9).diagram.pd_text() == project_knot_generic(cfg, 9).diagram.pd_text());
  ProjectionSpec a = ProjectionSpec::random(5), b = ProjectionSpec::random(5);
  CHECK(a.frame.direction == b.frame.direction);
}

TEST_CASE("edge-on projection of an ellipse is rejected") {
  const auto cfg = random_config(2, 5);
  ProjectionSpec spec = ProjectionSpec::from_direction(cfg.ellipses[0].u);
  CHECK_THROWS_AS(project_knot(cfg, spec), Error);
}

TEST_CASE("writhe is projection independent for two glued ellipses up to the bound") {
  const auto cfg = random_config(2, 21);
  for (std::uint64_t s = 1; s <= 8; ++s) {
    const auto d = project_knot_generic(cfg, s).diagram;
    CHECK(std::abs(d.writhe()) <= 1);
    CHECK(identify(d).is_unknot());
  }
}

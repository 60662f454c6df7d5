#include <doctest.h>

#include <algorithm>

#include "glued/error.hpp"
#include "glued/families.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"
#include "oracles.hpp"

using namespace glued;

namespace {

std::int64_t pow3(int k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

}  // namespace

TEST_CASE("max_writhe: writhe (m-1)^2 and torus Jones") {
  for (int m = 1; m <= 5; ++m) {
    const auto cfg = gen_max_writhe(m);
    CHECK(cfg.size() == m);
    const auto d = project_knot_generic(cfg, 1).diagram;
    CHECK(d.writhe() == (m - 1) * (m - 1));
    CHECK(d.crossing_count() == (m - 1) * (m - 1));
  }
  CHECK(jones(project_knot_generic(gen_max_writhe(3), 2).diagram) == oracle::poly(oracle::torus_jones(3, 2)));
  CHECK(jones(project_knot_generic(gen_max_writhe(4), 2).diagram) == oracle::poly(oracle::torus_jones(4, 3)));
}

TEST_CASE("three_color: 3^k colorings by an independent count") {
  for (int k = 3; k <= 6; ++k) {
    const auto cfg = gen_three_color(k);
    CHECK(cfg.size() == k + 2);
    const auto d = project_knot_generic(cfg, 3).diagram;
    CHECK(oracle::tricolorings_from_pd(d.pd_code()) == pow3(k));
    CHECK(family_target_met(Family::ThreeColor, k, cfg));
  }
}

TEST_CASE("connect_sum_trefoils: 3^(k+1) colorings") {
  for (int k = 1; k <= 3; ++k) {
    const auto cfg = gen_connect_sum_trefoils(k);
    CHECK(cfg.size() == 3 * k);
    const auto d = project_knot_generic(cfg, 4).diagram;
    CHECK(oracle::tricolorings_from_pd(d.pd_code()) == pow3(k + 1));
  }
}

TEST_CASE("low_crossing: reduced alternating with 2n-2 crossings") {
  const std::map<int, std::int64_t> figure_eight = {{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}};
  for (int n = 3; n <= 6; ++n) {
    const auto cfg = gen_low_crossing(n);
    CHECK(cfg.size() == n);
    const auto s = simplify(project_knot_generic(cfg, 5).diagram);
    CHECK(s.crossing_count() == 2 * n - 2);
    CHECK(oracle::alternating_by_gauss(s));
    if (n == 3) CHECK(jones(s) == oracle::poly(figure_eight));
  }
}

TEST_CASE("family names and preconditions") {
  for (Family f : {Family::MaxWrithe, Family::ThreeColor, Family::LowCrossing, Family::ConnectSumTrefoils}) {
    CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(generate(f, family_min_param(f) - 1), Error);
  }
  CHECK(parse_family("connect_sum") == Family::ConnectSumTrefoils);
  CHECK_THROWS_AS(parse_family("bogus"), Error);
  CHECK_THROWS_AS(bundled_config("nope"), Error);
  const auto names = bundled_config_names();
  CHECK(std::find(names.begin(), names.end(), "trefoil") != names.end());
  CHECK(std::find(names.begin(), names.end(), "figure_eight") != names.end());
}

TEST_CASE("bundled witnesses realize the trefoil and the figure-eight") {
  CHECK(identify(project_knot_generic(bundled_config("trefoil"), 1).diagram).name == "3_1");
  CHECK(identify(project_knot_generic(bundled_config("figure_eight"), 1).diagram).name == "4_1");
}

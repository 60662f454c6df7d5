#include <doctest.h>

#include <set>

#include "glued/config.hpp"
#include "glued/families.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"
#include "glued/skein.hpp"
#include "oracles.hpp"

using namespace glued;

namespace {

PregluedConfig mirrored(const PregluedConfig& cfg) {
  std::vector<Ellipse> es;
  for (Ellipse e : cfg.ellipses) {
    e.center.z() = -e.center.z();
    e.u.z() = -e.u.z();
    e.v.z() = -e.v.z();
    es.push_back(e);
  }
  return validate(es, cfg.edges);
}

}  // namespace

TEST_CASE("sign assignments enumerate all 2^(m-1) vectors") {
  const auto cfg = random_config(4, 2);
  const auto all = all_sign_assignments(cfg);
  CHECK(all.size() == 8);
  std::set<SignAssignment> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 8);
}

TEST_CASE("two ellipses: branch z-coefficients are linking numbers") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto cfg = random_config(2, seed);
    const auto spec = common_generic_spec(cfg, seed);
    const auto ex = conway_expansion(cfg, spec);
    REQUIRE(ex.branches.size() == 2);
    for (const auto& b : ex.branches) {
      const auto link = perturb(cfg, b.signs, spec.frame.direction);
      CHECK(b.value.coeff({1, 1}) == oracle::disk_linking(link.ellipses[0], link.ellipses[1]));
    }
    CHECK(ex.lhs == LaurentPoly::monomial(1, 1));
    CHECK(ex.lhs == ex.rhs);
    CHECK(check_conway_expansion(cfg, spec).pass());
  }
}

TEST_CASE("conway expansion holds for random and mirrored configurations") {
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto cfg = random_config(m, 30 + seed);
      const auto spec = common_generic_spec(cfg, seed);
      CHECK(check_conway_expansion(cfg, spec).pass());
      const auto mir = mirrored(cfg);
      CHECK(check_conway_expansion(mir, common_generic_spec(mir, seed)).pass());
    }
  }
  const auto mw = gen_max_writhe(3);
  CHECK(check_conway_expansion(mw, common_generic_spec(mw, 1)).pass());
}

TEST_CASE("bracket expansion exponents stay in the expected set") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto cfg = random_config(3, seed);
    const auto spec = common_generic_spec(cfg, seed);
    for (const std::vector<int>& sigma : {std::vector<int>{1, 1, 1}, std::vector<int>{-1, 1, 1}}) {
      const auto r = check_bracket_expansion(cfg, sigma, spec);
      CHECK(r.pass());
      const int e = std::stoi(r.stats.at("exponent"));
      CHECK(std::abs(e) <= 2);
      CHECK(e % 2 == 0);
    }
  }
  const auto one = random_config(1, 9);
  const auto r1 = check_bracket_expansion(one, {1}, common_generic_spec(one, 1));
  CHECK(r1.pass());
  CHECK(r1.stats.at("exponent") == "0");
}

TEST_CASE("forced state sums split the bracket") {
  const auto d = project_knot_generic(gen_max_writhe(3), 1).diagram;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto a = bracket_state_sum(d, {{c, Smoothing::A}});
    const auto b = bracket_state_sum(d, {{c, Smoothing::B}});
    CHECK(a + b == kauffman_bracket(d));
  }
}

#include <doctest.h>

#include "glued/diagram.hpp"
#include "glued/error.hpp"

using namespace glued;

namespace {
const char* kTrefoil = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)";
const char* kFigureEight = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)";
}  // namespace

TEST_CASE("PD round trip preserves the diagram") {
  for (const char* pd : {kTrefoil, kFigureEight}) {
    const Diagram d = Diagram::from_pd_text(pd);
    CHECK(d.component_count() == 1);
    const Diagram again = Diagram::from_pd(d.pd_code());
    CHECK(again.signs() == d.signs());
    CHECK(Diagram::from_pd(again.pd_code()) == again);
  }
}

TEST_CASE("trefoil and figure-eight structure") {
  const Diagram t = Diagram::from_pd_text(kTrefoil);
  CHECK(t.crossing_count() == 3);
  CHECK(std::abs(t.writhe()) == 3);
  CHECK(is_alternating(t));
  CHECK(is_reduced(t));
  CHECK(faces(t).size() == 5);
  const Diagram f = Diagram::from_pd_text(kFigureEight);
  CHECK(f.writhe() == 0);
  CHECK(is_alternating(f));
  CHECK(is_reduced(f));
  CHECK(faces(f).size() == 6);
}

TEST_CASE("Reidemeister simplification") {
  // R1 kink on the unknot.
  const Diagram kink({1}, {{{0, true}, {0, false}}});
  CHECK_FALSE(is_reduced(kink));
  CHECK(simplify(kink).crossing_count() == 0);
  // R2 pair of two unlinked circles pushed over each other.
  const Diagram r2({1, -1}, {{{0, true}, {1, true}}, {{1, false}, {0, false}}});
  const Diagram s = simplify(r2);
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 2);
  // The trefoil is already minimal.
  CHECK(simplify(Diagram::from_pd_text(kTrefoil)).crossing_count() == 3);
}

TEST_CASE("smoothing and switching") {
  const Diagram t = Diagram::from_pd_text(kTrefoil);
  const Diagram sm = t.smoothed_at(0);
  CHECK(sm.component_count() == 2);
  CHECK(sm.crossing_count() == 2);
  const Diagram sw = t.with_crossing_switched(0);
  CHECK(sw.writhe() == t.writhe() - 2 * t.signs()[0]);
  CHECK(t.mirror().writhe() == -t.writhe());
  CHECK(t.mirror().mirror() == t);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(Diagram::from_pd_text("X(1,2,3)"), Error);
  CHECK_THROWS_AS(Diagram::from_pd_text("X(1,2,3,5)"), Error);
  CHECK_THROWS_AS(Diagram({1}, {{{0, true}, {0, true}}}), Error);
}

TEST_CASE("prime diagram check") {
  CHECK(is_prime_diagram(Diagram::from_pd_text(kTrefoil)));
  CHECK(is_prime_diagram(Diagram::from_pd_text(kFigureEight)));
  // Granny knot: two trefoil blocks spliced together.
  const Diagram granny = Diagram::from_pd_text(
      "X(1,9,2,8),X(3,1,4,10),X(9,3,10,2),X(5,11,6,12),X(7,5,8,4),X(11,7,12,6)");
  CHECK(granny.crossing_count() == 6);
  CHECK_FALSE(is_prime_diagram(granny));
}

#include <doctest.h>

#include "glued/laurent.hpp"

using glued::LaurentPoly;

TEST_CASE("laurent arithmetic and canonical form") {
  const auto a = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1);
  CHECK((a * a).to_string("t") == "1*t^(-2/1)+-2*t^(0/1)+1*t^(2/1)");
  CHECK((a - a).is_zero());
  CHECK((a - a).to_string() == "0");
  const auto h = LaurentPoly::monomial(3, 2, 4);
  CHECK(h.unit() == 2);
  CHECK(h.to_string() == "3*q^(1/2)");
  CHECK((h * h).unit() == 1);
}

TEST_CASE("laurent substitution and evaluation") {
  const auto p = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, 3) - LaurentPoly::monomial(1, 4);
  CHECK(p.substitute_power(-1).to_string("t") == "-1*t^(-4/1)+1*t^(-3/1)+1*t^(-1/1)");
  CHECK(p.at_one() == 1);
  CHECK(p.at_minus_one() == -3);
  CHECK(p.span().value() == doctest::Approx(3.0));
  CHECK(LaurentPoly::monomial(1, 4).substitute_power(-1, 4).to_string("t") == "1*t^(-1/1)");
}

TEST_CASE("laurent parse round trip") {
  const auto p = LaurentPoly::monomial(2, -3, 2) + LaurentPoly::monomial(-5, 7);
  CHECK(LaurentPoly::parse(p.to_string("z")) == p);
  CHECK(LaurentPoly::parse("0").is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dshuffle/parse.hpp"

using namespace dshuffle;

namespace {

Series<Q> w(const std::string& s, const Q& c, int n) { return Series<Q>::monomial(parse_word(s), c, n); }

betti::GroupAlg g(FreeWord x, const Q& c = 1) { return betti::ga_word(x, c); }

const FLetter X0 = fgen(0), X1 = fgen(1);

}  // namespace

TEST_CASE("de Rham letters and juxtaposition") {
  const int n = 5;
  CHECK(parse_dr("e0e1", n) == w("e0e1", 1, n));
  CHECK(parse_dr("e0 * e1", n) == w("e0e1", 1, n));
  CHECK(parse_dr("y2", n) == w("e0e1", -1, n));
  CHECK(parse_dr("y1", n) == w("e1", -1, n));
  CHECK(parse_dr("y3", n) == w("e0e0e1", -1, n));
  CHECK(parse_dr("e0e1 - e1e0", n) == w("e0e1", 1, n) - w("e1e0", 1, n));
  CHECK(parse_dr("2/3 e0^2", n) == w("e0e0", Q(2, 3), n));
  CHECK(parse_dr("(e0+e1)^2", n) == w("e0e0", 1, n) + w("e0e1", 1, n) + w("e1e0", 1, n) + w("e1e1", 1, n));
  CHECK(parse_dr("1 + e1", n) == Series<Q>::one(n) + w("e1", 1, n));
  // truncation at n drops higher words
  CHECK(parse_dr("e0^3", 2) == Series<Q>(2));
  // a scalar is promoted
  CHECK(parse_dr("3", n) == 3 * Series<Q>::one(n));
}

TEST_CASE("group algebra letters") {
  CHECK(parse_betti("X0X1") == g({X0, X1}));
  CHECK(parse_betti("X0^-1") == g({(FLetter)-X0}));
  CHECK(parse_betti("X0 X0^-1") == betti::ga_one());
  CHECK(parse_betti("(X1X0)^-1") == g({(FLetter)-X0, (FLetter)-X1}));
  CHECK(parse_betti("Y1+") == betti::y_generator(1, 1));
  CHECK(parse_betti("Y2-") == betti::y_generator(2, -1));
  // Y1+ = X0 (1 - X1)
  CHECK(parse_betti("Y1+") == g({X0}) - g({X0, X1}));
  CHECK(parse_betti("Y1+ + X1") == betti::y_generator(1, 1) + g({X1}));
  CHECK(parse_betti("X1 - 1") == g({X1}) - betti::ga_one());
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-4") == Q(-4));
  CHECK(parse_rational("(1/2)^-2") == Q(4));
  CHECK(parse_rational("1/2 + 1/3") == Q(5, 6));
  CHECK(parse_rational("0/5") == Q(0));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("0^-1"), ParseError);
  CHECK_THROWS_AS(parse_rational("e0"), ParseError);
}

TEST_CASE("element sides") {
  CHECK(parse_element("1/2", 3).side == Side::Scalar);
  CHECK(parse_element("e1", 3).side == Side::DR);
  CHECK(parse_element("X1", 3).side == Side::Betti);
}

TEST_CASE("malformed input is rejected") {
  const int n = 4;
  CHECK_THROWS_AS(parse_element("e0 + X1", n), ParseError);
  CHECK_THROWS_AS(parse_element("y2 X0", n), ParseError);
  CHECK_THROWS_AS(parse_dr("X1", n), ParseError);
  CHECK_THROWS_AS(parse_betti("e1"), ParseError);
  CHECK_THROWS_AS(parse_dr("e0^-1", n), ParseError);
  CHECK_THROWS_AS(parse_betti("(X0 + X1)^-1"), ParseError);
  CHECK_THROWS_AS(parse_betti("(2 X0)^-1"), ParseError);
  CHECK_THROWS_AS(parse_dr("e2", n), ParseError);
  CHECK_THROWS_AS(parse_dr("y0", n), ParseError);
  CHECK_THROWS_AS(parse_betti("Y2"), ParseError);
  CHECK_THROWS_AS(parse_dr("(e0", n), ParseError);
  CHECK_THROWS_AS(parse_dr("e0 +", n), ParseError);
  CHECK_THROWS_AS(parse_dr("e0 )", n), ParseError);
  CHECK_THROWS_AS(parse_dr("z", n), ParseError);
  CHECK_THROWS_AS(parse_dr("", n), ParseError);
  CHECK_THROWS_AS(parse_dr("e0^1234567", n), ParseError);
}

TEST_CASE("error messages carry the position") {
  try {
    parse_dr("e0 + q", 3);
    FAIL("no throw");
  } catch (const ParseError& e) {
    std::string what = e.what();
    CHECK(what.find("unknown symbol 'q'") != std::string::npos);
    CHECK(what.find("5") != std::string::npos);
  }
}

#include <doctest.h>

#include "fieq/errors.hpp"
#include "fieq/expr.hpp"

using namespace fieq;

TEST_CASE("grammar") {
  CHECK(parse_implication("named:LK")(0.7, 0.3) == doctest::Approx(0.6));
  CHECK(parse_implication("r(tnorm:product)")(0.8, 0.2) == doctest::Approx(0.25));
  CHECK(parse_implication("r(product)").provenance().family == Family::r);
  CHECK(parse_implication("sn(tconorm:max, neg:standard)")(0.6, 0.2) == doctest::Approx(0.4));
  CHECK(parse_implication("ql(tnorm:min,tconorm:LK,neg:standard)")(0.7, 0.3) == doctest::Approx(0.6));
  CHECK(parse_implication("f(gen:one_minus)")(0.5, 0.5) == doctest::Approx(0.75));
  CHECK(parse_implication("g(gen:pow2)")(0.25, 0.5) == 1.0);
  CHECK(parse_implication("nabla(named:RC, named:RC)")(0.5, 0.5) == doctest::Approx(0.8125));
  CHECK(parse_implication("nabla(named:LK,nabla(named:GD,named:KD))").provenance().operands.size() == 2);
  CHECK(parse_implication("  sn ( tconorm:SD ,neg:ND1 )  ").provenance().family == Family::sn);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_implication(""), ParseError);
  CHECK_THROWS_AS(parse_implication("named:NOPE"), ParseError);
  CHECK_THROWS_AS(parse_implication("r(tnorm:min"), ParseError);
  CHECK_THROWS_AS(parse_implication("r(tnorm:min))"), ParseError);
  CHECK_THROWS_AS(parse_implication("sn(tconorm:max)"), ParseError);
  CHECK_THROWS_AS(parse_implication("h(gen:id)"), ParseError);
  CHECK_THROWS_AS(parse_implication("f(gen:pow2)"), ParseError);
  try {
    parse_implication("r(tnorm:nope)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("a failing QL-operation parses but cannot be composed") {
  const Implication ql = parse_implication("ql(tnorm:product,tconorm:prob_sum,neg:standard)");
  CHECK(ql(0.5, 1.0) == doctest::Approx(0.75));
  CHECK_THROWS_AS(parse_implication("nabla(ql(tnorm:product,tconorm:prob_sum,neg:standard),named:LK)"),
                  ConstructionError);
}

TEST_CASE("default tolerance follows the expression tree") {
  CHECK(default_tolerance(parse_implication("named:LK")) == kClosedFormTol);
  CHECK(default_tolerance(parse_implication("r(tnorm:product)")) == kClosedFormTol);
  CHECK(default_tolerance(parse_implication("r(tnorm:drastic)")) == kBisectionTol);
  CHECK(default_tolerance(parse_implication("nabla(named:LK,r(tnorm:drastic))")) == kBisectionTol);
  CHECK(default_tolerance(parse_implication("g(gen:tan)")) == kClosedFormTol);
}

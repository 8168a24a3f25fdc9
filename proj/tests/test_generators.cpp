#include <doctest.h>

#include <cmath>

#include "fieq/errors.hpp"
#include "fieq/generators.hpp"

using namespace fieq;

TEST_CASE("registered generators construct and have the right endpoints") {
  for (const auto& f : registered_f_generators()) {
    CAPTURE(f.name());
    CHECK(f(1.0).is_zero());
  }
  for (const auto& g : registered_g_generators()) {
    CAPTURE(g.name());
    CHECK(g(0.0).is_zero());
  }
  CHECK(f_generator("neglog").at_zero().is_infinite());
  CHECK(f_generator("one_minus").at_zero().value() == 1.0);
  CHECK(g_generator("tan").at_one().is_infinite());
  CHECK_FALSE(g_generator("tan").bounded());
  CHECK(g_generator("lin3").at_one().value() == 3.0);
}

TEST_CASE("invalid generators are rejected at construction") {
  CHECK_THROWS_AS(FGenerator("increasing", [](double x) { return Extended(x); }), ConstructionError);
  CHECK_THROWS_AS(FGenerator("f(1)!=0", [](double x) { return Extended(2.0 - x); }), ConstructionError);
  CHECK_THROWS_AS(GGenerator("decreasing", [](double x) { return Extended(1.0 - x); }), ConstructionError);
  CHECK_THROWS_AS(GGenerator("g(0)!=0", [](double x) { return Extended(x + 1.0); }), ConstructionError);
  CHECK_THROWS_AS(GGenerator("flat", [](double x) { return Extended(std::min(x, 0.5)); }), ConstructionError);
  CHECK_THROWS_AS(f_generator("gen:pow2"), UnknownNameError);
  CHECK_THROWS_AS(g_generator("gen:neglog"), UnknownNameError);
}

TEST_CASE("bisection inverse agrees with the closed form") {
  const FGenerator closed = f_generator("neglog");
  const FGenerator numeric("neglog-numeric", [](double x) {
    return x == 0.0 ? Extended::infinity() : Extended(x == 1.0 ? 0.0 : -std::log(x));
  });
  CHECK(numeric.numeric_inverse());
  CHECK_FALSE(closed.numeric_inverse());
  for (double v : {0.0, 1e-6, 0.1, 0.5, 1.0, 2.0, 10.0, 30.0}) {
    CAPTURE(v);
    CHECK(std::fabs(numeric.inverse(Extended(v)) - closed.inverse(Extended(v))) <= 1e-11);
  }
  CHECK(numeric.inverse(Extended::infinity()) == 0.0);

  const GGenerator g_closed = g_generator("ratio");
  const GGenerator g_numeric("ratio-numeric", [](double x) { return Extended(x / (2.0 - x)); });
  for (double v : {0.0, 0.01, 0.3, 0.9, 0.999}) {
    CAPTURE(v);
    CHECK(std::fabs(g_numeric.inverse(Extended(v)) - g_closed.inverse(Extended(v))) <= 1e-11);
  }
  CHECK(g_numeric.inverse(Extended(5.0)) == 1.0);
}

TEST_CASE("inverse round trips on the registry") {
  for (const auto& f : registered_f_generators()) {
    for (int i = 0; i <= 64; ++i) {
      const double x = i / 64.0;
      CAPTURE(f.name());
      CAPTURE(x);
      CHECK(std::fabs(f.inverse(f(x)) - x) <= 1e-12);
    }
  }
  for (const auto& g : registered_g_generators()) {
    for (int i = 0; i <= 64; ++i) {
      const double x = i / 64.0;
      CAPTURE(g.name());
      CAPTURE(x);
      CHECK(std::fabs(g.inverse(g(x)) - x) <= 1e-12);
    }
  }
}

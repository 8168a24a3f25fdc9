#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fieq/connectives.hpp"
#include "fieq/errors.hpp"

using namespace fieq;

TEST_CASE("verify_tnorm on registry members") {
  for (const auto& t : registered_tnorms()) {
    CAPTURE(t.name());
    const CheckReport r = verify_tnorm(t, 64);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.max_residual == 0.0);
  }
}

TEST_CASE("probabilistic sum is not a t-norm: neutral element fails") {
  const TNorm bogus("x+y-xy", [](double x, double y) { return x + y - x * y; });
  const CheckReport r = verify_tnorm(bogus, 64);
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.condition == "neutral");
  CHECK(bogus(1.0, 0.5) == 1.0);
  // worst case of |T(1,y) - y| is y = 0
  CHECK(r.worst_point == std::vector<double>{1.0, 0.0});
  CHECK(r.max_residual == doctest::Approx(1.0));
}

TEST_CASE("verify_tconorm") {
  for (const auto& s : registered_tconorms()) {
    CAPTURE(s.name());
    CHECK(verify_tconorm(s, 64).verdict == Verdict::holds);
  }
  const TConorm product("xy", [](double x, double y) { return x * y; });
  const CheckReport r = verify_tconorm(product, 64);
  CHECK(r.failed());
  CHECK(r.condition == "neutral");
  CHECK(product(0.0, 0.5) == 0.0);
}

TEST_CASE("verify_negation") {
  for (const auto& n : registered_negations()) {
    CAPTURE(n.name());
    CHECK(verify_negation(n).verdict == Verdict::holds);
  }
  const Negation identity("x", [](double x) { return x; });
  const CheckReport r = verify_negation(identity);
  CHECK(r.failed());
  CHECK(identity(0.0) == 0.0);
}

TEST_CASE("checks reject bad grid and tolerance") {
  CHECK_THROWS_AS(verify_tnorm(tnorm("min"), 1), InputError);
  CHECK_THROWS_AS(verify_tnorm(tnorm("min"), 64, 0.0), InputError);
  CHECK_THROWS_AS(verify_negation(negation("standard"), 0), InputError);
  CHECK_THROWS_AS(satisfies_lem(tconorm("max"), negation("standard"), 8, -1.0), InputError);
}

TEST_CASE("registry lookups") {
  CHECK(tnorm("tnorm:product").id() == TNormId::product);
  CHECK(tnorm("lukasiewicz").name() == "tnorm:lukasiewicz");
  CHECK(tconorm("tconorm:SD").id() == TConormId::drastic);
  CHECK(negation("neg:ND2")(0.999) == 1.0);
  CHECK(negation("neg:ND2")(1.0) == 0.0);
  CHECK(negation("neg:ND1")(0.0) == 1.0);
  CHECK(negation("neg:ND1")(1e-9) == 0.0);
  CHECK_THROWS_AS(tnorm("tnorm:hamacher"), UnknownNameError);
  CHECK_THROWS_AS(tconorm("nope"), UnknownNameError);
  CHECK_THROWS_AS(negation("neg:sugeno"), UnknownNameError);
}

TEST_CASE("boundary values of every registered t-norm are exact") {
  for (const auto& t : registered_tnorms()) {
    for (int i = 0; i <= 128; ++i) {
      const double x = i / 128.0;
      CHECK(t(x, 1.0) == x);
      CHECK(t(x, 0.0) == 0.0);
    }
  }
}

TEST_CASE("dual pairs under the standard negation") {
  const Negation n = negation("standard");
  const std::pair<const char*, const char*> pairs[] = {
      {"min", "max"}, {"product", "prob_sum"}, {"lukasiewicz", "LK"}, {"drastic", "SD"}};
  for (const auto& [tn, sn] : pairs) {
    const TNorm t = tnorm(tn);
    const TConorm s = tconorm(sn);
    double worst = 0.0;
    for (int i = 0; i <= 128; ++i) {
      for (int j = 0; j <= 128; ++j) {
        const double x = i / 128.0;
        const double y = j / 128.0;
        worst = std::max(worst, std::fabs(s(x, y) - n(t(n(x), n(y)))));
      }
    }
    CAPTURE(tn);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("is_positive_tconorm") {
  SUBCASE("max is certified positive") {
    const CheckReport r = is_positive_tconorm(tconorm("max"));
    CHECK(r.verdict == Verdict::holds);
  }
  SUBCASE("Lukasiewicz sum is falsified, e.g. at (0.5, 0.5)") {
    const TConorm s = tconorm("LK");
    CHECK(s(0.5, 0.5) == 1.0);
    const CheckReport r = is_positive_tconorm(s, 2);
    CHECK(r.failed());
    CHECK(r.worst_point == std::vector<double>{0.5, 0.5});
  }
  SUBCASE("probabilistic sum: certified, never falsified") {
    const CheckReport r = is_positive_tconorm(tconorm("prob_sum"));
    CHECK(r.verdict == Verdict::holds);
  }
  SUBCASE("uncertified custom positive conorm is only consistent") {
    const TConorm s("max-copy", [](double x, double y) { return std::max(x, y); });
    CHECK(is_positive_tconorm(s).verdict == Verdict::consistent);
  }
  SUBCASE("drastic sum is 1 on the open square, so it is not positive") {
    const TConorm s = tconorm("SD");
    CHECK(s(0.5, 0.5) == 1.0);
    const CheckReport r = is_positive_tconorm(s, 64);
    CHECK(r.failed());
    CHECK(r.worst_point == std::vector<double>{1.0 / 64, 1.0 / 64});
  }
}

TEST_CASE("max and probabilistic sum are never falsified at any resolution") {
  for (int n : {2, 3, 7, 16, 100, 255}) {
    CHECK(is_positive_tconorm(tconorm("max"), n).passed());
    CHECK(is_positive_tconorm(tconorm("prob_sum"), n).passed());
  }
}

TEST_CASE("positivity of t-norms and non-vanishing negations") {
  CHECK(is_positive_tnorm(tnorm("min")).verdict == Verdict::holds);
  CHECK(is_positive_tnorm(tnorm("product")).verdict == Verdict::holds);
  CHECK(is_positive_tnorm(tnorm("lukasiewicz")).failed());
  CHECK(is_positive_tnorm(tnorm("drastic")).failed());
  CHECK(is_non_vanishing(negation("standard")).verdict == Verdict::holds);
  CHECK(is_non_vanishing(negation("ND2")).verdict == Verdict::holds);
  CHECK(is_non_vanishing(negation("ND1")).failed());
}

TEST_CASE("satisfies_lem") {
  const Negation standard = negation("standard");
  CHECK(satisfies_lem(tconorm("LK"), standard).verdict == Verdict::holds);
  const CheckReport max_std = satisfies_lem(tconorm("max"), standard);
  CHECK(max_std.failed());
  CHECK(max_std.worst_point == std::vector<double>{0.5});
  CHECK(max_std.max_residual == doctest::Approx(0.5));
  // x = 0 and x = 1 hit a zero argument; inside both arguments are positive.
  CHECK(satisfies_lem(tconorm("SD"), standard).verdict == Verdict::holds);
}

TEST_CASE("LEM table over the registry") {
  // Expected by case analysis: ND2 pairs with every conorm, the standard
  // negation with LK and SD, ND1 with none.
  for (const auto& s : registered_tconorms()) {
    for (const auto& n : registered_negations()) {
      bool expected = n.id() == NegationId::nd2 ||
                      (n.id() == NegationId::standard &&
                       (s.id() == TConormId::lukasiewicz || s.id() == TConormId::drastic));
      CAPTURE(s.name());
      CAPTURE(n.name());
      CHECK(satisfies_lem(s, n).passed() == expected);
    }
  }
}

TEST_CASE("typed evaluation goes through UnitValue") {
  CHECK(tnorm("product").eval(UnitValue(0.5), UnitValue(0.5)).value() == 0.25);
  CHECK(negation("standard").eval(UnitValue(0.25)).value() == 0.75);
}

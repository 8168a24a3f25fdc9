#include <doctest.h>

#include <cmath>

#include "fieq/constructors.hpp"
#include "fieq/errors.hpp"
#include "fieq/expr.hpp"
#include "fixtures.hpp"

using namespace fieq;

namespace {

double max_gap(const Implication& a, double (*oracle)(double, double), int n) {
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double x = i / static_cast<double>(n);
      const double y = j / static_cast<double>(n);
      worst = std::max(worst, std::fabs(a(x, y) - oracle(x, y)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("R-implications: closed forms and bisection") {
  CHECK(r_implication(tnorm("min"))(0.8, 0.3) == 0.3);
  CHECK(r_implication(tnorm("product"))(0.8, 0.2) == doctest::Approx(0.25));
  for (const auto& t : registered_tnorms()) {
    CHECK(r_implication(t)(0.0, 0.0) == 1.0);
    CHECK(r_implication(t, kSupTol, ResiduumMode::bisection)(0.0, 0.0) == 1.0);
  }
  const Implication gd = r_implication(tnorm("min"), kSupTol, ResiduumMode::bisection);
  const Implication gg = r_implication(tnorm("product"), kSupTol, ResiduumMode::bisection);
  const Implication lk = r_implication(tnorm("lukasiewicz"), kSupTol, ResiduumMode::bisection);
  CHECK(gd.traits().bisection_backed);
  CHECK(std::fabs(gd(0.8, 0.3) - 0.3) <= kSupTol);
  CHECK(std::fabs(gg(0.8, 0.2) - 0.25) <= kSupTol);
  // agreement with the closed forms over the 129 x 129 grid
  CHECK(max_gap(gd, testing::goedel, 128) <= kSupTol);
  CHECK(max_gap(gg, testing::goguen, 128) <= kSupTol);
  CHECK(max_gap(lk, testing::lk, 128) <= kSupTol);
}

TEST_CASE("R-implication of the drastic t-norm is Weber's implication") {
  const Implication r = r_implication(tnorm("drastic"));
  CHECK(r.traits().bisection_backed);
  const Implication wb = named("WB");
  for (int i = 0; i <= 64; ++i) {
    for (int j = 0; j <= 64; ++j) {
      const double x = i / 64.0, y = j / 64.0;
      CHECK(std::fabs(r(x, y) - wb(x, y)) <= kSupTol);
    }
  }
}

TEST_CASE("r_implication rejects non-t-norms") {
  const TNorm bad("x+y-xy", [](double x, double y) { return x + y - x * y; });
  CHECK_THROWS_AS(r_implication(bad), ConstructionError);
  CHECK_THROWS_AS(r_implication(tnorm("min"), 0.0), InputError);
}

TEST_CASE("(S,N)-implications") {
  const Negation standard = negation("standard");
  CHECK(sn_implication(tconorm("max"), standard)(0.6, 0.2) == doctest::Approx(0.4));
  CHECK(sn_implication(tconorm("prob_sum"), standard)(0.5, 0.5) == doctest::Approx(0.75));
  const Implication sd = sn_implication(tconorm("SD"), standard);
  CHECK(sd(0.4, 0.0) == doctest::Approx(0.6));
  CHECK(sd(1.0, 0.3) == 0.3);
  CHECK(sd(0.4, 0.3) == 1.0);
  const Negation broken("x", [](double x) { return x; });
  CHECK_THROWS_AS(sn_implication(tconorm("max"), broken), ConstructionError);
}

TEST_CASE("QL-operations") {
  const Negation standard = negation("standard");
  SUBCASE("(min, LK, standard) is Lukasiewicz") {
    const QlResult ql = ql_operation(tnorm("min"), tconorm("LK"), standard);
    CHECK(ql.is_implication());
    CHECK(ql.operation.traits().axioms_certified);
    CHECK(max_gap(ql.operation, testing::lk, 128) <= 1e-15);
  }
  SUBCASE("(product, prob_sum, standard) = 1 - x + x^2 y violates I1") {
    const QlResult ql = ql_operation(tnorm("product"), tconorm("prob_sum"), standard);
    CHECK_FALSE(ql.is_implication());
    CHECK_FALSE(ql.operation.traits().axioms_certified);
    CHECK(ql.axioms.condition == "I1");
    CHECK(ql.operation(0.5, 1.0) == doctest::Approx(0.75));
    CHECK(ql.operation(0.9, 1.0) == doctest::Approx(0.91));
    CHECK(ql.axioms.worst_point[1] == 1.0);
  }
  SUBCASE("value at (0,0) is S(1,0) = 1") {
    for (const auto& t : registered_tnorms()) {
      for (const auto& s : registered_tconorms()) {
        for (const auto& n : registered_negations()) {
          CHECK(ql_operation(t, s, n, 8).operation(0.0, 0.0) == 1.0);
        }
      }
    }
  }
}

TEST_CASE("f-generated implications") {
  const Implication rc = f_implication(f_generator("one_minus"));
  CHECK(rc(0.5, 0.5) == doctest::Approx(0.75));
  CHECK(max_gap(rc, testing::reichenbach, 128) <= 1e-15);
  const Implication yg = f_implication(f_generator("neglog"));
  CHECK(yg(0.5, 0.5) == doctest::Approx(0.70711).epsilon(1e-5));
  CHECK(yg(0.0, 0.0) == 1.0);  // f^-1(0 * inf) = f^-1(0) = 1
  CHECK(yg(0.5, 0.0) == 0.0);  // f^-1(inf) = 0
  const Implication rec = f_implication(f_generator("recip"));
  CHECK(rec(0.0, 0.0) == 1.0);
  CHECK(rec(0.5, 0.5) == doctest::Approx(0.5 / (0.5 + 0.25)));
}

TEST_CASE("pseudo-inverse") {
  const GGenerator sq = g_generator("pow2");
  CHECK(pseudo_inverse(sq, 0.25).value() == doctest::Approx(0.5));
  CHECK(pseudo_inverse(sq, 4.0).value() == 1.0);
  CHECK(pseudo_inverse(sq, Extended::infinity()).value() == 1.0);
  for (const auto& g : registered_g_generators()) CHECK(pseudo_inverse(g, 0.0).value() == 0.0);
  CHECK_THROWS_AS(pseudo_inverse(sq, -0.1), DomainError);
  // unbounded generator: no clamp below infinity
  const GGenerator tan = g_generator("tan");
  CHECK(pseudo_inverse(tan, 1.0).value() == doctest::Approx(0.5));
}

TEST_CASE("g-generated implications") {
  const Implication id = g_implication(g_generator("id"));
  CHECK(id(0.8, 0.2) == doctest::Approx(0.25));
  CHECK(max_gap(id, testing::goguen, 128) <= 1e-15);
  const Implication sq = g_implication(g_generator("pow2"));
  CHECK(sq(0.25, 0.5) == 1.0);
  CHECK(sq(0.5, 0.5) == doctest::Approx(0.5 / std::sqrt(0.5)));
  for (const auto& g : registered_g_generators()) {
    const Implication imp = g_implication(g);
    CHECK(imp(0.0, 0.0) == 1.0);  // inf * 0 = inf
    CHECK(imp(0.0, 0.7) == 1.0);
  }
}

TEST_CASE("normalize_g and scale_g") {
  const GGenerator lin3 = g_generator("lin3");
  const GGenerator g1 = normalize_g(lin3);
  for (int i = 0; i <= 32; ++i) CHECK(g1(i / 32.0).value() == doctest::Approx(i / 32.0));
  const GGenerator sq = normalize_g(g_generator("pow2"));
  CHECK(sq(0.5).value() == 0.25);
  CHECK_THROWS_AS(normalize_g(g_generator("tan")), ConstructionError);
  CHECK_THROWS_AS(scale_g(lin3, 0.0), InputError);
  CHECK_THROWS_AS(scale_g(lin3, -2.0), InputError);
}

TEST_CASE("scaling the generator leaves I_g unchanged") {
  for (const auto& g : registered_g_generators()) {
    if (!g.bounded()) continue;
    const Implication base = g_implication(g);
    for (double c : {0.1, 0.5, 3.0, 17.0}) {
      const Implication scaled = g_implication(scale_g(g, c));
      const Implication norm = g_implication(normalize_g(scale_g(g, c)));
      double worst = 0.0;
      for (int i = 0; i <= 64; ++i) {
        for (int j = 0; j <= 64; ++j) {
          const double x = i / 64.0, y = j / 64.0;
          worst = std::max({worst, std::fabs(scaled(x, y) - base(x, y)), std::fabs(norm(x, y) - base(x, y))});
        }
      }
      CAPTURE(g.name());
      CAPTURE(c);
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("every construction passes check_axioms and f/g reproduce NP") {
  for (const auto& t : registered_tnorms()) {
    const Implication r = r_implication(t);
    CHECK(check_axioms(r, 64, default_tolerance(r)).passed());
  }
  for (const auto& s : registered_tconorms()) {
    for (const auto& n : registered_negations()) CHECK(check_axioms(sn_implication(s, n), 64).passed());
  }
  for (const auto& f : registered_f_generators()) {
    const Implication imp = f_implication(f);
    CAPTURE(imp.name());
    CHECK(check_axioms(imp, 128).passed());
    CHECK(has_np(imp, 128).passed());
  }
  for (const auto& g : registered_g_generators()) {
    const Implication imp = g_implication(g);
    CAPTURE(imp.name());
    CHECK(check_axioms(imp, 128).passed());
    CHECK(has_np(imp, 128).passed());
  }
}

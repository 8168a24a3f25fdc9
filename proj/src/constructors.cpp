#include "fieq/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fieq/errors.hpp"

namespace fieq {
namespace {

// Construction-time sweep resolution for connectives handed to a constructor.
constexpr int kConstructionGrid = 64;

double residuum_by_bisection(const TNorm& t, double x, double y, double sup_tol) {
  if (t(x, 1.0) <= y) return 1.0;
  double lo = 0.0;  // T(x,0) = 0 <= y
  double hi = 1.0;
  while (hi - lo > sup_tol) {
    const double mid = std::midpoint(lo, hi);
    if (t(x, mid) <= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void require(const CheckReport& r, const std::string& what) {
  if (r.failed()) {
    throw ConstructionError(what + " fails " + r.condition + " (residual " + std::to_string(r.max_residual) + ")");
  }
}

}  // namespace

Implication r_implication(const TNorm& t, double sup_tol, ResiduumMode mode) {
  if (!(sup_tol > 0.0)) throw InputError("sup_tol must be positive");
  require(verify_tnorm(t, kConstructionGrid, kClosedFormTol), t.name());

  Provenance prov{.family = Family::r, .tnorm = t};
  const std::string name = "r(" + t.name() + ")";
  if (mode == ResiduumMode::prefer_closed_form) {
    const ImplicationTraits traits{.bisection_backed = false, .axioms_certified = true};
    switch (t.id()) {
      case TNormId::min:
        return Implication(name, [](double x, double y) { return x <= y ? 1.0 : y; }, std::move(prov), traits);
      case TNormId::product:
        return Implication(name, [](double x, double y) { return x <= y ? 1.0 : y / x; }, std::move(prov), traits);
      case TNormId::lukasiewicz:
        return Implication(name, [](double x, double y) { return std::min(1.0, 1.0 - x + y); }, std::move(prov),
                           traits);
      default: break;
    }
  }
  return Implication(
      name, [t, sup_tol](double x, double y) { return residuum_by_bisection(t, x, y, sup_tol); }, std::move(prov),
      ImplicationTraits{.bisection_backed = true, .axioms_certified = true});
}

Implication sn_implication(const TConorm& s, const Negation& n) {
  require(verify_tconorm(s, kConstructionGrid, kClosedFormTol), s.name());
  require(verify_negation(n, kConstructionGrid, kClosedFormTol), n.name());
  Provenance prov{.family = Family::sn, .tconorm = s, .negation = n};
  return Implication(
      "sn(" + s.name() + "," + n.name() + ")", [s, n](double x, double y) { return s(n(x), y); }, std::move(prov),
      ImplicationTraits{.bisection_backed = false, .axioms_certified = true});
}

QlResult ql_operation(const TNorm& t, const TConorm& s, const Negation& n, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  require(verify_tnorm(t, kConstructionGrid, kClosedFormTol), t.name());
  require(verify_tconorm(s, kConstructionGrid, kClosedFormTol), s.name());
  require(verify_negation(n, kConstructionGrid, kClosedFormTol), n.name());
  const std::string name = "ql(" + t.name() + "," + s.name() + "," + n.name() + ")";
  auto fn = [t, s, n](double x, double y) { return s(n(x), t(x, y)); };

  Implication candidate(name, fn, Provenance{.family = Family::ql, .tnorm = t, .tconorm = s, .negation = n});
  CheckReport axioms = check_axioms(candidate, grid_n, tol);
  if (axioms.failed()) return QlResult{std::move(candidate), std::move(axioms)};
  Implication labeled(name, fn, Provenance{.family = Family::ql, .tnorm = t, .tconorm = s, .negation = n},
                      ImplicationTraits{.bisection_backed = false, .axioms_certified = true});
  return QlResult{std::move(labeled), std::move(axioms)};
}

Implication f_implication(const FGenerator& f) {
  Provenance prov{.family = Family::f, .f = f};
  return Implication(
      "f(" + f.name() + ")", [f](double x, double y) { return f.inverse(scale_zero_absorbing(x, f(y))); },
      std::move(prov), ImplicationTraits{.bisection_backed = f.numeric_inverse(), .axioms_certified = true});
}

UnitValue pseudo_inverse(const GGenerator& g, Extended v) {
  if (v > g.at_one() || v == g.at_one()) return UnitValue(1.0);
  return UnitValue(g.inverse(v));
}

UnitValue pseudo_inverse(const GGenerator& g, double v) {
  if (std::isnan(v) || v < 0.0) throw DomainError("pseudo_inverse argument must be >= 0");
  return pseudo_inverse(g, Extended(v));
}

Implication g_implication(const GGenerator& g) {
  Provenance prov{.family = Family::g, .g = g};
  return Implication(
      "g(" + g.name() + ")",
      [g](double x, double y) {
        return pseudo_inverse(g, product_infinity_absorbing(reciprocal(x), g(y))).value();
      },
      std::move(prov), ImplicationTraits{.bisection_backed = g.numeric_inverse(), .axioms_certified = true});
}

GGenerator normalize_g(const GGenerator& g) {
  if (!g.bounded()) throw ConstructionError(g.name() + ": g(1) = inf cannot be normalized");
  const double top = g.at_one().value();
  GeneratorMap map = [g, top](double x) { return Extended(g(x).value() / top); };
  std::optional<GeneratorInverse> inverse;
  if (!g.numeric_inverse()) {
    inverse = [g, top](Extended v) { return g.inverse(Extended(v.value() * top)); };
  }
  return GGenerator("normalize(" + g.name() + ")", std::move(map), std::move(inverse));
}

GGenerator scale_g(const GGenerator& g, double c) {
  if (!(c > 0.0) || std::isinf(c)) throw InputError("scale factor must lie in (0,inf)");
  GeneratorMap map = [g, c](double x) {
    const Extended v = g(x);
    return v.is_infinite() ? v : Extended(c * v.value());
  };
  std::optional<GeneratorInverse> inverse;
  if (!g.numeric_inverse()) {
    inverse = [g, c](Extended v) { return g.inverse(v.is_infinite() ? v : Extended(v.value() / c)); };
  }
  return GGenerator(std::to_string(c) + "*" + g.name(), std::move(map), std::move(inverse));
}

}  // namespace fieq

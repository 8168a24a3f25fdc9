#pragma once

#include "fieq/connectives.hpp"
#include "fieq/generators.hpp"
#include "fieq/implications.hpp"
#include "fieq/report.hpp"
#include "fieq/unit.hpp"

namespace fieq {

inline constexpr double kSupTol = 1e-10;

enum class ResiduumMode {
  prefer_closed_form,  // min -> GD, product -> GG, lukasiewicz -> LK
  bisection,           // always compute the supremum numerically
};

/// R-implication I_T(x,y) = sup{t in [0,1] : T(x,t) <= y}.
///
/// T(x, .) is increasing, so the admissible set is a down-set of [0,1] and the
/// supremum is found by bisection to sup_tol. The returned value is always an
/// admissible t. Throws ConstructionError when T fails verify_tnorm.
Implication r_implication(const TNorm& t, double sup_tol = kSupTol,
                          ResiduumMode mode = ResiduumMode::prefer_closed_form);

/// I(x,y) = S(N(x), y). Throws ConstructionError on invalid S or N.
Implication sn_implication(const TConorm& s, const Negation& n);

struct QlResult {
  Implication operation;  // I(x,y) = S(N(x), T(x,y))
  CheckReport axioms;

  /// True when the operation passed check_axioms and is a QL-implication.
  bool is_implication() const noexcept { return axioms.passed(); }
};

/// Builds the QL-operation and sweeps it for (I1)-(I3). Failing the axioms is
/// reported, not thrown.
QlResult ql_operation(const TNorm& t, const TConorm& s, const Negation& n, int grid_n = kDefaultGrid,
                      double tol = kClosedFormTol);

/// I(x,y) = f^-1(x * f(y)) with 0 * inf = 0.
Implication f_implication(const FGenerator& f);

/// g^(-1)(v): g^-1(v) for v <= g(1), 1 above. Throws DomainError for v < 0.
UnitValue pseudo_inverse(const GGenerator& g, Extended v);
UnitValue pseudo_inverse(const GGenerator& g, double v);

/// I(x,y) = g^(-1)((1/x) * g(y)) with 1/0 = inf and inf * 0 = inf.
Implication g_implication(const GGenerator& g);

/// g1(x) = g(x) / g(1). Throws ConstructionError when g(1) = inf.
GGenerator normalize_g(const GGenerator& g);

/// (c*g)(x) for c in (0, inf). Throws InputError otherwise.
GGenerator scale_g(const GGenerator& g, double c);

}  // namespace fieq

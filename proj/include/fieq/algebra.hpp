#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fieq/implications.hpp"
#include "fieq/report.hpp"

namespace fieq {

/// (I nabla J)(x,y) = I(J(y,x), J(x,y)). Throws ConstructionError when an
/// uncertified operand fails check_axioms.
Implication nabla(const Implication& i, const Implication& j);

/// Residual of I(I(y,x), I(x,y)) = I(x,y) at one point.
Witness ie_witness_at(const Implication& imp, double x, double y);

/// Sweeps G_n^2. Fails with a witness when the residual exceeds tol, otherwise
/// `consistent`; a continuous sweep never returns `holds`.
CheckReport check_ie(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

struct ResidualCell {
  double x;
  double y;
  double residual;
};

/// Pointwise IE residuals, row-major over G_n^2 (x outer).
std::vector<ResidualCell> ie_residual_grid(const Implication& imp, int grid_n);

/// Coarse scan of G_coarse^2, then refine_depth rounds of mesh halving in a
/// 5x5 window around the incumbent. Returns the best point when its residual
/// exceeds tol.
std::optional<Witness> find_counterexample(const Implication& imp, int coarse_n = 16, int refine_depth = 5,
                                           double tol = kClosedFormTol);

/// check_axioms on nabla(I, J).
CheckReport check_nabla_closure(const Implication& i, const Implication& j, int grid_n = kDefaultGrid,
                                double tol = kClosedFormTol);

/// ((I nabla J) nabla K) against (I nabla (J nabla K)) on G_n^2.
CheckReport check_associativity(const Implication& i, const Implication& j, const Implication& k,
                                int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Every property predicate plus IE. EP uses min(grid_n, kDefaultGrid3).
PropertyFlags assess_properties(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

enum class Prediction { satisfies, violates };
std::string_view to_string(Prediction p) noexcept;

struct TheoremRow {
  std::string theorem;     // stable identifier, e.g. "sn-max"
  std::string hypothesis;  // what was detected
  std::string via;         // construction the hypothesis was read from
  Prediction predicted = Prediction::satisfies;
  bool consistent = false;
};

/// A named implication agrees with one of its known constructions.
struct IdentityRow {
  std::string construction;
  double max_deviation = 0.0;
  double tol = 0.0;
  bool agrees = false;
};

struct SuiteReport {
  std::string implication;
  int grid_n = 0;
  double tol = 0.0;
  CheckReport ie;
  std::optional<Witness> witness;  // from the sweep or the refinement search
  std::vector<IdentityRow> identities;
  std::vector<TheoremRow> rows;

  bool observed_violation() const noexcept { return witness.has_value(); }
  bool theorem_applies() const noexcept { return !rows.empty(); }
  bool all_consistent() const noexcept;
};

/// Reads hypotheses off provenance (and, for registry members, off their
/// known constructions) and the property predicates, predicts the IE verdict
/// each applicable theorem implies, and compares with the observed sweep.
SuiteReport theorem_suite(const Implication& imp, int grid_n = kDefaultGrid, double tol = kClosedFormTol);

/// Known constructions of a registry member ("LK" -> r(lukasiewicz), ...).
std::vector<Implication> named_constructions(std::string_view id);

}  // namespace fieq

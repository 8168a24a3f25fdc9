#include "fieq/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fieq/constructors.hpp"
#include "fieq/detail/sweep.hpp"
#include "fieq/errors.hpp"

namespace fieq {
namespace {

using detail::make_sample;
using detail::offer;
using detail::Sample;

constexpr int kConstructionGrid = 64;

double ie_lhs(const Implication& imp, double x, double y) { return imp(imp(y, x), imp(x, y)); }

Sample ie_sample(const Implication& imp, double x, double y) {
  const double rhs = imp(x, y);
  const double lhs = imp(imp(y, x), rhs);
  return make_sample(std::fabs(lhs - rhs), {x, y}, "IE", lhs, rhs);
}

void require_implication(const Implication& imp) {
  if (imp.traits().axioms_certified) return;
  const CheckReport r = check_axioms(imp, kConstructionGrid, kClosedFormTol);
  if (r.failed()) {
    throw ConstructionError(imp.name() + " is not a fuzzy implication: " + r.condition + " fails");
  }
}

std::uint64_t square(int n) {
  const auto m = static_cast<std::uint64_t>(n + 1);
  return m * m;
}

}  // namespace

Implication nabla(const Implication& i, const Implication& j) {
  require_implication(i);
  require_implication(j);
  Provenance prov{.family = Family::nabla};
  prov.operands = {i, j};
  const ImplicationTraits traits{
      .bisection_backed = i.traits().bisection_backed || j.traits().bisection_backed,
      .axioms_certified = true,
  };
  return Implication(
      "nabla(" + i.name() + "," + j.name() + ")", [i, j](double x, double y) { return i(j(y, x), j(x, y)); },
      std::move(prov), traits);
}

Witness ie_witness_at(const Implication& imp, double x, double y) {
  const double rhs = imp(x, y);
  const double lhs = ie_lhs(imp, x, y);
  return Witness{x, y, lhs, rhs, detail::sanitize(std::fabs(lhs - rhs))};
}

CheckReport check_ie(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  const Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), n);
    Sample row;
    for (int j = 0; j <= n; ++j) offer(row, ie_sample(imp, x, grid_point(j, n)));
    return row;
  });
  return detail::finish(best, square(n), grid_n, tol, Verdict::consistent);
}

std::vector<ResidualCell> ie_residual_grid(const Implication& imp, int grid_n) {
  if (grid_n < 2) throw InputError("grid_n must be at least 2");
  std::vector<ResidualCell> out;
  out.reserve(square(grid_n));
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n; ++j) {
      const double x = grid_point(i, grid_n);
      const double y = grid_point(j, grid_n);
      out.push_back({x, y, ie_witness_at(imp, x, y).residual});
    }
  }
  return out;
}

std::optional<Witness> find_counterexample(const Implication& imp, int coarse_n, int refine_depth, double tol) {
  validate_grid(coarse_n, tol);
  if (refine_depth < 0) throw InputError("refine_depth must be non-negative");

  Sample best;
  for (int i = 0; i <= coarse_n; ++i) {
    for (int j = 0; j <= coarse_n; ++j) offer(best, ie_sample(imp, grid_point(i, coarse_n), grid_point(j, coarse_n)));
  }
  double mesh = 1.0 / coarse_n;
  for (int round = 0; round < refine_depth; ++round) {
    mesh /= 2.0;
    const double cx = best.point[0];
    const double cy = best.point[1];
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        const double x = std::clamp(cx + a * mesh, 0.0, 1.0);
        const double y = std::clamp(cy + b * mesh, 0.0, 1.0);
        offer(best, ie_sample(imp, x, y));
      }
    }
  }
  if (!(best.residual > tol)) return std::nullopt;
  return Witness{best.point[0], best.point[1], best.lhs, best.rhs, best.residual};
}

CheckReport check_nabla_closure(const Implication& i, const Implication& j, int grid_n, double tol) {
  return check_axioms(nabla(i, j), grid_n, tol);
}

CheckReport check_associativity(const Implication& i, const Implication& j, const Implication& k, int grid_n,
                                double tol) {
  validate_grid(grid_n, tol);
  const Implication left = nabla(nabla(i, j), k);
  const Implication right = nabla(i, nabla(j, k));
  const int n = grid_n;
  const Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t r) {
    const double x = grid_point(static_cast<int>(r), n);
    Sample row;
    for (int c = 0; c <= n; ++c) {
      const double y = grid_point(c, n);
      const double l = left(x, y);
      const double rv = right(x, y);
      offer(row, make_sample(std::fabs(l - rv), {x, y}, "associativity", l, rv));
    }
    return row;
  });
  return detail::finish(best, square(n), grid_n, tol, Verdict::consistent);
}

PropertyFlags assess_properties(const Implication& imp, int grid_n, double tol) {
  PropertyFlags flags;
  flags.axioms = check_axioms(imp, grid_n, tol);
  auto record = [&](const char* label, const CheckReport& r) {
    if (r.failed() && r.worst_point.size() >= 2) {
      flags.witnesses.emplace_back(label, Witness{r.worst_point[0], r.worst_point[1], r.lhs, r.rhs, r.max_residual});
    }
    return to_tri(r);
  };
  record("axioms", flags.axioms);
  flags.np = record("np", has_np(imp, grid_n, tol));
  flags.op = record("op", has_op(imp, grid_n, tol));
  flags.ip = record("ip", has_ip(imp, grid_n, tol));
  flags.ep = record("ep", has_ep(imp, std::min(grid_n, kDefaultGrid3), tol));
  flags.np_on_range = record("np_on_range", has_np_on_range(imp, grid_n, tol));
  flags.ie = record("ie", check_ie(imp, grid_n, tol));
  return flags;
}

std::string_view to_string(Prediction p) noexcept {
  return p == Prediction::satisfies ? "satisfies-IE" : "violates-IE";
}

bool SuiteReport::all_consistent() const noexcept {
  for (const auto& id : identities) {
    if (!id.agrees) return false;
  }
  for (const auto& row : rows) {
    if (!row.consistent) return false;
  }
  return true;
}

std::vector<Implication> named_constructions(std::string_view id) {
  if (id.substr(0, 6) == "named:") id.remove_prefix(6);
  const Negation standard = negation("standard");
  if (id == "LK") {
    return {r_implication(tnorm("lukasiewicz")), sn_implication(tconorm("LK"), standard),
            ql_operation(tnorm("min"), tconorm("LK"), standard).operation};
  }
  if (id == "GD") return {r_implication(tnorm("min"))};
  if (id == "RC") return {sn_implication(tconorm("prob_sum"), standard), f_implication(f_generator("one_minus"))};
  if (id == "KD") return {sn_implication(tconorm("max"), standard)};
  if (id == "GG") return {r_implication(tnorm("product")), g_implication(g_generator("id"))};
  if (id == "WB") {
    return {r_implication(tnorm("drastic")), sn_implication(tconorm("max"), negation("ND2")),
            ql_operation(tnorm("min"), tconorm("max"), negation("ND2")).operation};
  }
  if (id == "YG") return {f_implication(f_generator("neglog"))};
  if (id == "DP") return {sn_implication(tconorm("SD"), standard)};
  return {};
}

namespace {

bool g_is_linear(const GGenerator& g) {
  if (!g.bounded()) return false;
  const double top = g.at_one().value();
  for (int i = 0; i <= kDefaultGrid; ++i) {
    const double x = grid_point(i, kDefaultGrid);
    if (std::fabs(g(x).value() / top - x) > kClosedFormTol) return false;
  }
  return true;
}

// Theorems whose hypotheses are read from how `view` was constructed.
void provenance_rows(const Implication& view, int grid_n, double tol, std::vector<TheoremRow>& rows) {
  const Provenance& p = view.provenance();
  const std::string& via = view.name();
  auto add = [&](std::string theorem, std::string hypothesis, Prediction pred) {
    rows.push_back(TheoremRow{std::move(theorem), std::move(hypothesis), via, pred, false});
  };
  switch (p.family) {
    case Family::r:
      add("r-implication", "residuum of " + p.tnorm->name(), Prediction::satisfies);
      break;
    case Family::sn: {
      const TConorm& s = *p.tconorm;
      const Negation& n = *p.negation;
      if (s.id() == TConormId::max) add("sn-max", "S = max", Prediction::satisfies);
      if (s.id() == TConormId::drastic) add("sn-drastic", "S = S_D", Prediction::satisfies);
      if (satisfies_lem(s, n, grid_n, kClosedFormTol).passed()) {
        add("sn-lem", "S(N(x),x) = 1 on the grid", Prediction::satisfies);
      }
      break;
    }
    case Family::ql: {
      if (!view.traits().axioms_certified) break;  // a QL-operation only
      const TNorm& t = *p.tnorm;
      const TConorm& s = *p.tconorm;
      const Negation& n = *p.negation;
      if (is_positive_tconorm(s, grid_n, kClosedFormTol).verdict == Verdict::holds) {
        add("ql-positive-s", "S positive (certified)", Prediction::satisfies);
      }
      if (t.id() == TNormId::min) add("ql-min", "T = min", Prediction::satisfies);
      if (s.id() == TConormId::drastic && is_non_vanishing(n, grid_n, kClosedFormTol).verdict == Verdict::holds &&
          is_positive_tnorm(t, grid_n, kClosedFormTol).verdict == Verdict::holds) {
        add("ql-drastic", "S = S_D, N non-vanishing, T positive", Prediction::satisfies);
      }
      if (has_ip(view, grid_n, tol).passed()) add("ql-ip", "QL-implication with IP", Prediction::satisfies);
      break;
    }
    case Family::f:
      add("f-impossibility", "f-generated", Prediction::violates);
      break;
    case Family::g:
      if (!p.g->bounded()) {
        add("g-unbounded", "g(1) = inf", Prediction::violates);
      } else if (g_is_linear(*p.g)) {
        add("g-characterization", "g(x) = g(1) x", Prediction::satisfies);
      } else {
        add("g-characterization", "g not linear", Prediction::violates);
      }
      break;
    case Family::named:
    case Family::nabla:
      break;
  }
}

double max_deviation(const Implication& a, const Implication& b, int grid_n) {
  double worst = 0.0;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n; ++j) {
      const double x = grid_point(i, grid_n);
      const double y = grid_point(j, grid_n);
      worst = std::max(worst, detail::sanitize(std::fabs(a(x, y) - b(x, y))));
    }
  }
  return worst;
}

}  // namespace

SuiteReport theorem_suite(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  SuiteReport report;
  report.implication = imp.name();
  report.grid_n = grid_n;
  report.tol = tol;
  report.ie = check_ie(imp, grid_n, tol);

  std::vector<Implication> views{imp};
  if (imp.provenance().family == Family::named) {
    for (Implication& c : named_constructions(imp.name())) {
      const double id_tol = c.traits().bisection_backed ? std::max(tol, kBisectionTol) : tol;
      const double dev = max_deviation(imp, c, grid_n);
      report.identities.push_back(IdentityRow{c.name(), dev, id_tol, dev <= id_tol});
      views.push_back(std::move(c));
    }
  }

  std::vector<TheoremRow>& rows = report.rows;
  if (has_op(imp, grid_n, tol).passed()) {
    const bool range_np = has_np_on_range(imp, grid_n, tol).passed();
    rows.push_back(TheoremRow{"op-np-range", range_np ? "OP and NP on range" : "OP without NP on range",
                              imp.name(), range_np ? Prediction::satisfies : Prediction::violates, false});
  }
  if (has_np(imp, grid_n, tol).passed() && has_ip(imp, grid_n, tol).passed()) {
    rows.push_back(TheoremRow{"np-ip", "NP and IP", imp.name(), Prediction::satisfies, false});
  }
  for (const Implication& v : views) provenance_rows(v, grid_n, tol, rows);

  if (auto w = report.ie.witness()) {
    report.witness = w;
  } else {
    const bool expects_violation = std::any_of(rows.begin(), rows.end(), [](const TheoremRow& r) {
      return r.predicted == Prediction::violates;
    });
    if (expects_violation) report.witness = find_counterexample(imp, 16, 5, tol);
  }
  for (TheoremRow& row : rows) {
    row.consistent = (row.predicted == Prediction::violates) == report.observed_violation();
  }
  return report;
}

}  // namespace fieq

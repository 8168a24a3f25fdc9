#include "fieq/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fieq/detail/sweep.hpp"
#include "fieq/errors.hpp"

namespace fieq {
namespace {

using detail::make_sample;
using detail::offer;
using detail::Sample;

std::string canonical(std::string_view prefix, std::string_view id) {
  if (id.substr(0, prefix.size()) == prefix) id.remove_prefix(prefix.size());
  return std::string(id);
}

TNorm make_tnorm(TNormId id) {
  switch (id) {
    case TNormId::min:
      return TNorm("tnorm:min", [](double x, double y) { return std::min(x, y); },
                   {.closed_form = true, .left_continuous = true, .positive = true}, id);
    case TNormId::product:
      return TNorm("tnorm:product", [](double x, double y) { return x * y; },
                   {.closed_form = true, .left_continuous = true, .positive = true}, id);
    case TNormId::lukasiewicz:
      return TNorm("tnorm:lukasiewicz", [](double x, double y) { return std::max(0.0, x + y - 1.0); },
                   {.closed_form = true, .left_continuous = true, .positive = false}, id);
    case TNormId::drastic:
      return TNorm("tnorm:drastic",
                   [](double x, double y) {
                     if (x == 1.0) return y;
                     if (y == 1.0) return x;
                     return 0.0;
                   },
                   {.closed_form = true, .left_continuous = false, .positive = false}, id);
    case TNormId::custom: break;
  }
  throw UnknownNameError("tnorm:custom");
}

TConorm make_tconorm(TConormId id) {
  switch (id) {
    case TConormId::max:
      return TConorm("tconorm:max", [](double x, double y) { return std::max(x, y); },
                     {.closed_form = true, .positive = true}, id);
    case TConormId::prob_sum:
      // x+y-xy = 1 iff (1-x)(1-y) = 0, so positivity is certified.
      return TConorm("tconorm:prob_sum", [](double x, double y) { return x + y - x * y; },
                     {.closed_form = true, .positive = true}, id);
    case TConormId::lukasiewicz:
      return TConorm("tconorm:LK", [](double x, double y) { return std::min(1.0, x + y); },
                     {.closed_form = true, .positive = false}, id);
    case TConormId::drastic:
      return TConorm("tconorm:SD",
                     [](double x, double y) {
                       if (x == 0.0) return y;
                       if (y == 0.0) return x;
                       return 1.0;
                     },
                     {.closed_form = true, .positive = false}, id);
    case TConormId::custom: break;
  }
  throw UnknownNameError("tconorm:custom");
}

Negation make_negation(NegationId id) {
  switch (id) {
    case NegationId::standard:
      return Negation("neg:standard", [](double x) { return 1.0 - x; },
                      {.strong = true, .non_vanishing = true}, id);
    case NegationId::nd2:
      return Negation("neg:ND2", [](double x) { return x < 1.0 ? 1.0 : 0.0; },
                      {.strong = false, .non_vanishing = true}, id);
    case NegationId::nd1:
      return Negation("neg:ND1", [](double x) { return x == 0.0 ? 1.0 : 0.0; },
                      {.strong = false, .non_vanishing = false}, id);
    case NegationId::custom: break;
  }
  throw UnknownNameError("neg:custom");
}

// Shared body of the t-norm / t-conorm checks; `neutral` is 1 or 0.
template <class Op>
CheckReport verify_monoid(const Op& op, double neutral, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  const auto rows = static_cast<std::size_t>(n + 1);

  Sample best = detail::reduce_parallel(rows, [&](std::size_t k) {
    const int i = static_cast<int>(k);
    const double x = grid_point(i, n);
    Sample row;
    // neutral element, reported at (neutral, y)
    {
      const double v = op(neutral, x);
      offer(row, make_sample(std::fabs(v - x), {neutral, x}, "neutral", v, x));
    }
    for (int j = 0; j <= n; ++j) {
      const double y = grid_point(j, n);
      const double xy = op(x, y);
      const double yx = op(y, x);
      offer(row, make_sample(std::fabs(xy - yx), {x, y}, "commutativity", xy, yx));
      if (i < n) {
        const double up = op(grid_point(i + 1, n), y);
        offer(row, make_sample(std::max(0.0, xy - up), {x, y}, "monotonicity", xy, up));
      }
      if (j < n) {
        const double right = op(x, grid_point(j + 1, n));
        offer(row, make_sample(std::max(0.0, xy - right), {x, y}, "monotonicity", xy, right));
      }
    }
    return row;
  });

  const int m = std::min(grid_n, kDefaultGrid3);
  Sample assoc = detail::reduce_parallel(static_cast<std::size_t>(m + 1), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), m);
    Sample s;
    for (int j = 0; j <= m; ++j) {
      const double y = grid_point(j, m);
      const double xy = op(x, y);
      for (int l = 0; l <= m; ++l) {
        const double z = grid_point(l, m);
        const double left = op(xy, z);
        const double right = op(x, op(y, z));
        offer(s, make_sample(std::fabs(left - right), {x, y, z}, "associativity", left, right));
      }
    }
    return s;
  });
  offer(best, assoc);

  const auto r = static_cast<std::uint64_t>(n + 1);
  const auto a = static_cast<std::uint64_t>(m + 1);
  return detail::finish(best, r * r + a * a * a, grid_n, tol, Verdict::holds);
}

}  // namespace

TNorm tnorm(std::string_view id) {
  const std::string key = canonical("tnorm:", id);
  if (key == "min" || key == "M") return make_tnorm(TNormId::min);
  if (key == "product" || key == "P") return make_tnorm(TNormId::product);
  if (key == "lukasiewicz" || key == "LK") return make_tnorm(TNormId::lukasiewicz);
  if (key == "drastic" || key == "D") return make_tnorm(TNormId::drastic);
  throw UnknownNameError(std::string(id));
}

TConorm tconorm(std::string_view id) {
  const std::string key = canonical("tconorm:", id);
  if (key == "max" || key == "M") return make_tconorm(TConormId::max);
  if (key == "prob_sum" || key == "P") return make_tconorm(TConormId::prob_sum);
  if (key == "LK" || key == "lukasiewicz") return make_tconorm(TConormId::lukasiewicz);
  if (key == "SD" || key == "drastic") return make_tconorm(TConormId::drastic);
  throw UnknownNameError(std::string(id));
}

Negation negation(std::string_view id) {
  const std::string key = canonical("neg:", id);
  if (key == "standard") return make_negation(NegationId::standard);
  if (key == "ND2") return make_negation(NegationId::nd2);
  if (key == "ND1") return make_negation(NegationId::nd1);
  throw UnknownNameError(std::string(id));
}

std::vector<TNorm> registered_tnorms() {
  return {make_tnorm(TNormId::min), make_tnorm(TNormId::product), make_tnorm(TNormId::lukasiewicz),
          make_tnorm(TNormId::drastic)};
}

std::vector<TConorm> registered_tconorms() {
  return {make_tconorm(TConormId::max), make_tconorm(TConormId::prob_sum),
          make_tconorm(TConormId::lukasiewicz), make_tconorm(TConormId::drastic)};
}

std::vector<Negation> registered_negations() {
  return {make_negation(NegationId::standard), make_negation(NegationId::nd2),
          make_negation(NegationId::nd1)};
}

CheckReport verify_tnorm(const TNorm& t, int grid_n, double tol) {
  return verify_monoid(t, 1.0, grid_n, tol);
}

CheckReport verify_tconorm(const TConorm& s, int grid_n, double tol) {
  return verify_monoid(s, 0.0, grid_n, tol);
}

CheckReport verify_negation(const Negation& neg, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  Sample best;
  const double at0 = neg(0.0);
  const double at1 = neg(1.0);
  offer(best, make_sample(std::fabs(at0 - 1.0), {0.0}, "N(0)=1", at0, 1.0));
  offer(best, make_sample(std::fabs(at1), {1.0}, "N(1)=0", at1, 0.0));
  double prev = at0;
  for (int i = 1; i <= grid_n; ++i) {
    const double cur = neg(grid_point(i, grid_n));
    offer(best, make_sample(std::max(0.0, cur - prev), {grid_point(i - 1, grid_n)}, "decreasing", prev, cur));
    prev = cur;
  }
  return detail::finish(best, static_cast<std::uint64_t>(grid_n + 1), grid_n, tol, Verdict::holds);
}

CheckReport is_positive_tconorm(const TConorm& s, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), n);
    Sample row;
    for (int j = 0; j < n; ++j) {
      const double y = grid_point(j, n);
      const double v = s(x, y);
      offer(row, make_sample(v >= 1.0 - tol ? 1.0 : 0.0, {x, y}, "S(x,y)=1 with x,y<1", v, 1.0));
    }
    return row;
  });
  const auto cnt = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return detail::finish(best, cnt, grid_n, tol, s.flags().positive ? Verdict::holds : Verdict::consistent);
}

CheckReport is_positive_tnorm(const TNorm& t, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k) + 1, n);
    Sample row;
    for (int j = 1; j <= n; ++j) {
      const double y = grid_point(j, n);
      const double v = t(x, y);
      offer(row, make_sample(v <= tol ? 1.0 : 0.0, {x, y}, "T(x,y)=0 with x,y>0", v, 0.0));
    }
    return row;
  });
  const auto cnt = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return detail::finish(best, cnt, grid_n, tol, t.flags().positive ? Verdict::holds : Verdict::consistent);
}

CheckReport is_non_vanishing(const Negation& neg, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  Sample best;
  for (int i = 0; i < grid_n; ++i) {
    const double x = grid_point(i, grid_n);
    const double v = neg(x);
    offer(best, make_sample(v <= tol ? 1.0 : 0.0, {x}, "N(x)=0 with x<1", v, 0.0));
  }
  return detail::finish(best, static_cast<std::uint64_t>(grid_n), grid_n, tol,
                        neg.flags().non_vanishing ? Verdict::holds : Verdict::consistent);
}

CheckReport satisfies_lem(const TConorm& s, const Negation& neg, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  Sample best;
  for (int i = 0; i <= grid_n; ++i) {
    const double x = grid_point(i, grid_n);
    const double v = s(neg(x), x);
    offer(best, make_sample(std::fabs(v - 1.0), {x}, "S(N(x),x)=1", v, 1.0));
  }
  return detail::finish(best, static_cast<std::uint64_t>(grid_n + 1), grid_n, tol, Verdict::holds);
}

}  // namespace fieq

#include "fieq/implications.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fieq/detail/sweep.hpp"
#include "fieq/errors.hpp"

namespace fieq {
namespace {

using detail::make_sample;
using detail::offer;
using detail::Sample;

struct NamedEntry {
  std::string_view id;
  double (*fn)(double, double);
};

constexpr std::array<NamedEntry, 10> kNamed{{
    {"LK", [](double x, double y) { return std::min(1.0, 1.0 - x + y); }},
    {"GD", [](double x, double y) { return x <= y ? 1.0 : y; }},
    {"RC", [](double x, double y) { return 1.0 - x + x * y; }},
    {"KD", [](double x, double y) { return std::max(1.0 - x, y); }},
    {"GG", [](double x, double y) { return x <= y ? 1.0 : y / x; }},
    {"RS", [](double x, double y) { return x <= y ? 1.0 : 0.0; }},
    {"WB", [](double x, double y) { return x < 1.0 ? 1.0 : y; }},
    {"YG", [](double x, double y) { return x == 0.0 ? 1.0 : std::pow(y, x); }},
    {"FD", [](double x, double y) { return x <= y ? 1.0 : std::max(1.0 - x, y); }},
    {"DP",
     [](double x, double y) {
       if (x == 1.0) return y;
       if (y == 0.0) return 1.0 - x;
       return 1.0;
     }},
}};

Implication make_named(const NamedEntry& e) {
  return Implication("named:" + std::string(e.id), e.fn, Provenance{},
                     ImplicationTraits{.bisection_backed = false, .axioms_certified = true});
}

std::uint64_t square(int n) {
  const auto m = static_cast<std::uint64_t>(n + 1);
  return m * m;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::named: return "named";
    case Family::r: return "r";
    case Family::sn: return "sn";
    case Family::ql: return "ql";
    case Family::f: return "f";
    case Family::g: return "g";
    case Family::nabla: return "nabla";
  }
  return "?";
}

std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::holds: return "holds";
    case Tri::fails: return "fails";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

Tri to_tri(const CheckReport& r) noexcept {
  switch (r.verdict) {
    case Verdict::holds: return Tri::holds;
    case Verdict::fails: return Tri::fails;
    case Verdict::consistent: return Tri::unknown;
  }
  return Tri::unknown;
}

Implication::Implication(std::string name, Fn fn, Provenance provenance, ImplicationTraits traits)
    : node_(std::make_shared<const Node>(Node{std::move(name), std::move(fn), std::move(provenance), traits})) {}

const std::string& Implication::name() const noexcept { return node_->name; }
const Provenance& Implication::provenance() const noexcept { return node_->provenance; }
const ImplicationTraits& Implication::traits() const noexcept { return node_->traits; }

UnitValue evaluate(const Implication& imp, double x, double y) {
  const UnitValue ux(x);
  const UnitValue uy(y);
  return UnitValue(imp(ux.value(), uy.value()));
}

Implication named(std::string_view id) {
  std::string_view key = id;
  if (key.substr(0, 6) == "named:") key.remove_prefix(6);
  for (const auto& e : kNamed) {
    if (e.id == key) return make_named(e);
  }
  throw UnknownNameError(std::string(id));
}

std::vector<Implication> registered_named() {
  std::vector<Implication> out;
  out.reserve(kNamed.size());
  for (const auto& e : kNamed) out.push_back(make_named(e));
  return out;
}

std::vector<std::string> named_ids() {
  std::vector<std::string> out;
  for (const auto& e : kNamed) out.emplace_back(e.id);
  return out;
}

CheckReport check_axioms(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t k) {
    const int i = static_cast<int>(k);
    const double x = grid_point(i, n);
    const double x_next = i < n ? grid_point(i + 1, n) : x;
    Sample row;
    double cur = imp(x, 0.0);
    for (int j = 0; j <= n; ++j) {
      const double y = grid_point(j, n);
      if (i < n) {
        const double below = imp(x_next, y);
        offer(row, make_sample(std::max(0.0, below - cur), {x, y}, "I1", cur, below));
      }
      if (j < n) {
        const double next = imp(x, grid_point(j + 1, n));
        offer(row, make_sample(std::max(0.0, cur - next), {x, y}, "I2", cur, next));
        cur = next;
      }
    }
    return row;
  });
  const double v00 = imp(0.0, 0.0);
  const double v11 = imp(1.0, 1.0);
  const double v10 = imp(1.0, 0.0);
  offer(best, make_sample(std::fabs(v00 - 1.0), {0.0, 0.0}, "I3", v00, 1.0));
  offer(best, make_sample(std::fabs(v11 - 1.0), {1.0, 1.0}, "I3", v11, 1.0));
  offer(best, make_sample(std::fabs(v10), {1.0, 0.0}, "I3", v10, 0.0));
  return detail::finish(best, square(n), grid_n, tol, Verdict::holds);
}

CheckReport has_np(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  Sample best;
  for (int j = 0; j <= grid_n; ++j) {
    const double y = grid_point(j, grid_n);
    const double v = imp(1.0, y);
    offer(best, make_sample(std::fabs(v - y), {1.0, y}, "NP", v, y));
  }
  return detail::finish(best, static_cast<std::uint64_t>(grid_n + 1), grid_n, tol, Verdict::holds);
}

CheckReport has_op(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), n);
    Sample row;
    for (int j = 0; j <= n; ++j) {
      const double y = grid_point(j, n);
      const double v = imp(x, y);
      if (x <= y) {
        offer(row, make_sample(std::fabs(1.0 - v), {x, y}, "OP: x<=y implies I=1", v, 1.0));
      } else {
        offer(row, make_sample(v >= 1.0 - tol ? 1.0 : 0.0, {x, y}, "OP: x>y implies I<1", v, 1.0));
      }
    }
    return row;
  });
  return detail::finish(best, square(n), grid_n, tol, Verdict::holds);
}

CheckReport has_ip(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  Sample best;
  for (int i = 0; i <= grid_n; ++i) {
    const double x = grid_point(i, grid_n);
    const double v = imp(x, x);
    offer(best, make_sample(std::fabs(1.0 - v), {x, x}, "IP", v, 1.0));
  }
  return detail::finish(best, static_cast<std::uint64_t>(grid_n + 1), grid_n, tol, Verdict::holds);
}

CheckReport has_ep(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), n);
    Sample s;
    for (int j = 0; j <= n; ++j) {
      const double y = grid_point(j, n);
      for (int l = 0; l <= n; ++l) {
        const double z = grid_point(l, n);
        const double lhs = imp(x, imp(y, z));
        const double rhs = imp(y, imp(x, z));
        offer(s, make_sample(std::fabs(lhs - rhs), {x, y, z}, "EP", lhs, rhs));
      }
    }
    return s;
  });
  const auto m = static_cast<std::uint64_t>(n + 1);
  return detail::finish(best, m * m * m, grid_n, tol, Verdict::holds);
}

CheckReport has_np_on_range(const Implication& imp, int grid_n, double tol) {
  validate_grid(grid_n, tol);
  const int n = grid_n;
  Sample best = detail::reduce_parallel(static_cast<std::size_t>(n + 1), [&](std::size_t k) {
    const double x = grid_point(static_cast<int>(k), n);
    Sample row;
    for (int j = 0; j <= n; ++j) {
      const double y = grid_point(j, n);
      const double alpha = imp(x, y);
      const double v = imp(1.0, alpha);
      offer(row, make_sample(std::fabs(v - alpha), {x, y}, "NP on range", v, alpha));
    }
    return row;
  });
  return detail::finish(best, square(n), grid_n, tol, Verdict::holds);
}

}  // namespace fieq

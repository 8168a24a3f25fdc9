#include "fieq/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fieq/errors.hpp"
#include "fieq/report.hpp"

namespace fieq {
namespace {

constexpr int kConstructionGrid = 256;

std::string strip(std::string_view id) {
  constexpr std::string_view prefix = "gen:";
  if (id.substr(0, prefix.size()) == prefix) id.remove_prefix(prefix.size());
  return std::string(id);
}

// Largest x in [0,1] with pred(x) true, for pred true at 0 and false at 1.
template <class Pred>
double bisect(Pred pred) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kInverseTol) {
    const double mid = std::midpoint(lo, hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::midpoint(lo, hi);
}

}  // namespace

FGenerator::FGenerator(std::string name, GeneratorMap f, std::optional<GeneratorInverse> inverse)
    : name_(std::move(name)), f_(std::move(f)), inverse_(std::move(inverse)) {
  if (!f_(1.0).is_zero()) throw ConstructionError(name_ + ": f(1) must be 0");
  at_zero_ = f_(0.0);
  Extended prev = at_zero_;
  for (int i = 1; i <= kConstructionGrid; ++i) {
    const Extended cur = f_(grid_point(i, kConstructionGrid));
    if (!(cur < prev)) throw ConstructionError(name_ + ": f must be strictly decreasing");
    prev = cur;
  }
}

double FGenerator::inverse(Extended v) const {
  if (v >= at_zero_) return 0.0;
  if (v.is_zero()) return 1.0;
  if (inverse_) return (*inverse_)(v);
  // f decreasing: f(x) >= v holds on [0, f^-1(v)]
  return bisect([&](double x) { return f_(x) >= v; });
}

GGenerator::GGenerator(std::string name, GeneratorMap g, std::optional<GeneratorInverse> inverse)
    : name_(std::move(name)), g_(std::move(g)), inverse_(std::move(inverse)) {
  if (!g_(0.0).is_zero()) throw ConstructionError(name_ + ": g(0) must be 0");
  at_one_ = g_(1.0);
  Extended prev = g_(0.0);
  for (int i = 1; i <= kConstructionGrid; ++i) {
    const Extended cur = g_(grid_point(i, kConstructionGrid));
    if (!(cur > prev)) throw ConstructionError(name_ + ": g must be strictly increasing");
    prev = cur;
  }
}

double GGenerator::inverse(Extended v) const {
  if (v >= at_one_) return 1.0;
  if (v.is_zero()) return 0.0;
  if (inverse_) return (*inverse_)(v);
  return bisect([&](double x) { return g_(x) <= v; });
}

FGenerator f_generator(std::string_view id) {
  const std::string key = strip(id);
  if (key == "one_minus") {
    return FGenerator(
        "gen:one_minus", [](double x) { return Extended(1.0 - x); },
        [](Extended v) { return 1.0 - v.value(); });
  }
  if (key == "neglog") {
    return FGenerator(
        "gen:neglog",
        [](double x) { return x == 0.0 ? Extended::infinity() : Extended(x == 1.0 ? 0.0 : -std::log(x)); },
        [](Extended v) { return std::exp(-v.value()); });
  }
  if (key == "recip") {
    return FGenerator(
        "gen:recip", [](double x) { return x == 0.0 ? Extended::infinity() : Extended((1.0 - x) / x); },
        [](Extended v) { return 1.0 / (1.0 + v.value()); });
  }
  throw UnknownNameError(std::string(id));
}

GGenerator g_generator(std::string_view id) {
  const std::string key = strip(id);
  if (key == "id") {
    return GGenerator(
        "gen:id", [](double x) { return Extended(x); }, [](Extended v) { return v.value(); });
  }
  if (key == "lin3") {
    return GGenerator(
        "gen:lin3", [](double x) { return Extended(3.0 * x); }, [](Extended v) { return v.value() / 3.0; });
  }
  if (key == "pow2") {
    return GGenerator(
        "gen:pow2", [](double x) { return Extended(x * x); }, [](Extended v) { return std::sqrt(v.value()); });
  }
  if (key == "sqrt") {
    return GGenerator(
        "gen:sqrt", [](double x) { return Extended(std::sqrt(x)); },
        [](Extended v) { return v.value() * v.value(); });
  }
  if (key == "ratio") {
    return GGenerator(
        "gen:ratio", [](double x) { return Extended(x / (2.0 - x)); },
        [](Extended v) { return 2.0 * v.value() / (1.0 + v.value()); });
  }
  if (key == "tan") {
    return GGenerator(
        "gen:tan",
        [](double x) {
          return x == 1.0 ? Extended::infinity() : Extended(std::tan(std::numbers::pi * x / 2.0));
        },
        [](Extended v) { return 2.0 * std::atan(v.value()) / std::numbers::pi; });
  }
  throw UnknownNameError(std::string(id));
}

std::vector<FGenerator> registered_f_generators() {
  return {f_generator("one_minus"), f_generator("neglog"), f_generator("recip")};
}

std::vector<GGenerator> registered_g_generators() {
  return {g_generator("id"),   g_generator("lin3"),  g_generator("pow2"),
          g_generator("sqrt"), g_generator("ratio"), g_generator("tan")};
}

}  // namespace fieq

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieq/unit.hpp"

namespace fieq {

inline constexpr double kInverseTol = 1e-12;

using GeneratorMap = std::function<Extended(double)>;
using GeneratorInverse = std::function<double(Extended)>;

/// Strictly decreasing continuous f: [0,1] -> [0,inf] with f(1) = 0.
///
/// The inverse is the supplied closed form when given, otherwise bisection on
/// [0,1] to kInverseTol. Construction checks monotonicity and the endpoint on
/// a grid and throws ConstructionError.
class FGenerator {
 public:
  FGenerator(std::string name, GeneratorMap f, std::optional<GeneratorInverse> inverse = std::nullopt);

  Extended operator()(double x) const { return f_(x); }
  /// f^-1 on [0, f(0)]; values above f(0) map to 0.
  double inverse(Extended v) const;

  Extended at_zero() const noexcept { return at_zero_; }
  bool numeric_inverse() const noexcept { return !inverse_.has_value(); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  GeneratorMap f_;
  std::optional<GeneratorInverse> inverse_;
  Extended at_zero_;
};

/// Strictly increasing continuous g: [0,1] -> [0,inf] with g(0) = 0.
class GGenerator {
 public:
  GGenerator(std::string name, GeneratorMap g, std::optional<GeneratorInverse> inverse = std::nullopt);

  Extended operator()(double x) const { return g_(x); }
  /// g^-1 on [0, g(1)]; values above g(1) map to 1.
  double inverse(Extended v) const;

  Extended at_one() const noexcept { return at_one_; }
  bool bounded() const noexcept { return !at_one_.is_infinite(); }
  bool numeric_inverse() const noexcept { return !inverse_.has_value(); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  GeneratorMap g_;
  std::optional<GeneratorInverse> inverse_;
  Extended at_one_;
};

// Registry: "gen:one_minus", "gen:neglog", "gen:recip" (f);
// "gen:id", "gen:lin3", "gen:pow2", "gen:sqrt", "gen:ratio", "gen:tan" (g).
FGenerator f_generator(std::string_view id);
GGenerator g_generator(std::string_view id);
std::vector<FGenerator> registered_f_generators();
std::vector<GGenerator> registered_g_generators();

}  // namespace fieq

#pragma once

#include <compare>
#include <limits>

namespace fieq {

/// A truth degree in [0,1]. Construction from anything else throws DomainError.
class UnitValue {
 public:
  constexpr UnitValue() noexcept = default;
  explicit UnitValue(double v);

  constexpr double value() const noexcept { return value_; }
  constexpr explicit operator double() const noexcept { return value_; }

  friend constexpr auto operator<=>(UnitValue, UnitValue) = default;

 private:
  double value_ = 0.0;
};

/// A value in the extended half-line [0, inf].
///
/// Plain multiplication refuses 0 * inf. The two generator families resolve
/// that product in opposite ways, so each convention lives in its own named
/// function and is called only where the generator definition demands it.
class Extended {
 public:
  constexpr Extended() noexcept = default;
  explicit Extended(double v);  // v in [0, +inf]; +inf maps to infinity()

  static constexpr Extended infinity() noexcept { return Extended(Tag{}); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0.0; }
  /// The finite value, or +inf.
  constexpr double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend bool operator==(Extended a, Extended b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(Extended a, Extended b) noexcept {
    return a.value() <=> b.value();
  }

 private:
  struct Tag {};
  constexpr explicit Extended(Tag) noexcept : infinite_(true) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

/// Ordinary product; throws DomainError on 0 * inf.
Extended operator*(Extended a, Extended b);
Extended operator*(double a, Extended b);

/// x * v with 0 * inf = 0 (f-generated implications).
Extended scale_zero_absorbing(double x, Extended v);

/// 1/x with 1/0 = inf.
Extended reciprocal(double x);

/// a * b with inf * 0 = inf (g-generated implications).
Extended product_infinity_absorbing(Extended a, Extended b);

}  // namespace fieq

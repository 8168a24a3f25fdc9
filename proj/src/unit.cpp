#include "fieq/unit.hpp"

#include <cmath>
#include <string>

#include "fieq/errors.hpp"

namespace fieq {

UnitValue::UnitValue(double v) : value_(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("value outside [0,1]: " + std::to_string(v));
  }
}

Extended::Extended(double v) : value_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw DomainError("extended value must lie in [0,inf]: " + std::to_string(v));
  }
  if (std::isinf(v)) {
    value_ = 0.0;
    infinite_ = true;
  }
}

Extended operator*(Extended a, Extended b) {
  if ((a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero())) {
    throw DomainError("0 * inf is undefined without a convention");
  }
  if (a.is_infinite() || b.is_infinite()) return Extended::infinity();
  return Extended(a.value() * b.value());
}

Extended operator*(double a, Extended b) { return Extended(a) * b; }

Extended scale_zero_absorbing(double x, Extended v) {
  if (x == 0.0) return Extended(0.0);
  return Extended(x) * v;
}

Extended reciprocal(double x) {
  if (x == 0.0) return Extended::infinity();
  return Extended(1.0 / x);
}

Extended product_infinity_absorbing(Extended a, Extended b) {
  if (a.is_infinite() || b.is_infinite()) return Extended::infinity();
  return Extended(a.value() * b.value());
}

}  // namespace fieq

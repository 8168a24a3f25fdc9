#pragma once

#include <cmath>

#include "fieq/implications.hpp"

namespace fieq::testing {

// 1 if x <= y else y/2. Has OP, lacks NP on its range.
inline Implication half_rescher() {
  return Implication("half-rescher", [](double x, double y) { return x <= y ? 1.0 : y / 2.0; }, Provenance{},
                     ImplicationTraits{.bisection_backed = false, .axioms_certified = false});
}

// Closed forms used as independent oracles.
inline double lk(double x, double y) { return std::min(1.0, 1.0 - x + y); }
inline double goguen(double x, double y) { return x <= y ? 1.0 : y / x; }
inline double goedel(double x, double y) { return x <= y ? 1.0 : y; }
inline double reichenbach(double x, double y) { return 1.0 - x + x * y; }

}  // namespace fieq::testing

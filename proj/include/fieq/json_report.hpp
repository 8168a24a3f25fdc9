#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fieq/algebra.hpp"
#include "fieq/report.hpp"

namespace fieq {

/// {implication, equation, verdict, max_residual, worst_point, lhs, rhs,
///  grid_n, tol, samples, condition}
nlohmann::json report_json(const CheckReport& r, std::string_view implication, std::string_view equation);

nlohmann::json witness_json(const Witness& w);

/// {name, axioms: {...}, np, op, ip, ep, np_on_range, ie, witnesses: [...]}
nlohmann::json properties_json(const PropertyFlags& p, std::string_view name);

nlohmann::json suite_json(const SuiteReport& s);

/// Header `x,y,residual`, one row per cell, shortest round-trip decimals.
void write_residual_csv(std::ostream& out, const std::vector<ResidualCell>& cells);

}  // namespace fieq

#include "fieq/json_report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

namespace fieq {
namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

void put(std::ostream& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, res.ptr - buf);
}

}  // namespace

nlohmann::json report_json(const CheckReport& r, std::string_view implication, std::string_view equation) {
  nlohmann::json point = nlohmann::json::array();
  for (double c : r.worst_point) point.push_back(number(c));
  return {
      {"implication", implication},
      {"equation", equation},
      {"verdict", to_string(r.verdict)},
      {"max_residual", number(r.max_residual)},
      {"worst_point", point},
      {"lhs", number(r.lhs)},
      {"rhs", number(r.rhs)},
      {"condition", r.condition},
      {"grid_n", r.grid_n},
      {"tol", r.tol},
      {"samples", r.samples},
  };
}

nlohmann::json witness_json(const Witness& w) {
  return {{"point", {number(w.x), number(w.y)}},
          {"lhs", number(w.lhs)},
          {"rhs", number(w.rhs)},
          {"residual", number(w.residual)}};
}

nlohmann::json properties_json(const PropertyFlags& p, std::string_view name) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [label, w] : p.witnesses) {
    nlohmann::json entry = witness_json(w);
    entry["property"] = label;
    witnesses.push_back(std::move(entry));
  }
  return {
      {"name", name},
      {"axioms", report_json(p.axioms, name, "axioms")},
      {"np", to_string(p.np)},
      {"op", to_string(p.op)},
      {"ip", to_string(p.ip)},
      {"ep", to_string(p.ep)},
      {"np_on_range", to_string(p.np_on_range)},
      {"ie", to_string(p.ie)},
      {"witnesses", witnesses},
  };
}

nlohmann::json suite_json(const SuiteReport& s) {
  nlohmann::json identities = nlohmann::json::array();
  for (const auto& id : s.identities) {
    identities.push_back({{"construction", id.construction},
                          {"max_deviation", number(id.max_deviation)},
                          {"tol", id.tol},
                          {"agrees", id.agrees}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.rows) {
    rows.push_back({{"theorem", row.theorem},
                    {"hypothesis", row.hypothesis},
                    {"via", row.via},
                    {"predicted", to_string(row.predicted)},
                    {"consistent", row.consistent}});
  }
  return {
      {"implication", s.implication},
      {"grid_n", s.grid_n},
      {"tol", s.tol},
      {"ie", report_json(s.ie, s.implication, "IE")},
      {"observed", s.observed_violation() ? "violates-IE" : "no violation found"},
      {"witness", s.witness ? witness_json(*s.witness) : nlohmann::json(nullptr)},
      {"identities", identities},
      {"theorems", rows},
      {"status", !s.all_consistent() ? "INCONSISTENT" : (s.theorem_applies() ? "CONSISTENT" : "no theorem applies")},
  };
}

void write_residual_csv(std::ostream& out, const std::vector<ResidualCell>& cells) {
  out << "x,y,residual\n";
  for (const auto& c : cells) {
    put(out, c.x);
    out << ',';
    put(out, c.y);
    out << ',';
    put(out, c.residual);
    out << '\n';
  }
}

}  // namespace fieq

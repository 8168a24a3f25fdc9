// Command-line front end: check equations and properties of implication
// expressions, run the theorem suite, enumerate implications on finite chains.
//
// Exit status: 0 holds/consistent, 1 fails, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fieq/fieq.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Usage("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void require_implication(const fieq::Implication& imp) {
  if (imp.traits().axioms_certified) return;
  const fieq::CheckReport r = fieq::check_axioms(imp);
  if (r.failed()) {
    std::ostringstream msg;
    msg << imp.name() << " is not a fuzzy implication (" << r.condition << " fails, residual " << r.max_residual
        << ")";
    throw Usage(msg.str());
  }
}

void print_text(std::ostream& out, const fieq::CheckReport& r, const std::string& name, const std::string& eq) {
  out << name << "  " << eq << ": " << fieq::to_string(r.verdict) << "\n";
  out << "  max_residual " << r.max_residual << " (tol " << r.tol << ", grid " << r.grid_n << ", " << r.samples
      << " samples)\n";
  if (!r.worst_point.empty()) {
    out << "  worst point (";
    for (std::size_t k = 0; k < r.worst_point.size(); ++k) out << (k ? ", " : "") << r.worst_point[k];
    out << ") " << r.condition << ": lhs " << r.lhs << " rhs " << r.rhs << "\n";
  }
}

struct CheckOptions {
  std::string expr;
  std::string eq = "ie";
  std::optional<int> grid;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
};

int run_check(const CheckOptions& o) {
  const fieq::Implication imp = fieq::parse_implication(o.expr);
  const int grid = o.grid.value_or(o.eq == "ep" ? fieq::kDefaultGrid3 : fieq::kDefaultGrid);
  const double tol = o.tol.value_or(fieq::default_tolerance(imp));
  if (o.eq != "axioms") require_implication(imp);
  if (o.format == "csv" && o.eq != "ie") throw Usage("csv export is only available for --eq ie");

  fieq::CheckReport report;
  if (o.eq == "axioms") report = fieq::check_axioms(imp, grid, tol);
  else if (o.eq == "ie") report = fieq::check_ie(imp, grid, tol);
  else if (o.eq == "np") report = fieq::has_np(imp, grid, tol);
  else if (o.eq == "op") report = fieq::has_op(imp, grid, tol);
  else if (o.eq == "ip") report = fieq::has_ip(imp, grid, tol);
  else if (o.eq == "ep") report = fieq::has_ep(imp, grid, tol);
  else report = fieq::has_np_on_range(imp, grid, tol);

  Sink sink(o.out);
  std::ostream& out = sink.stream();
  const std::string equation = o.eq == "ie" ? "IE" : o.eq;
  if (o.format == "json") {
    out << fieq::report_json(report, imp.name(), equation).dump(2) << "\n";
  } else if (o.format == "csv") {
    fieq::write_residual_csv(out, fieq::ie_residual_grid(imp, grid));
  } else {
    print_text(out, report, imp.name(), equation);
  }
  if (report.failed() && o.format != "json") {
    if (auto w = report.witness()) {
      std::cerr << "witness (" << w->x << ", " << w->y << "): lhs " << w->lhs << " rhs " << w->rhs << " residual "
                << w->residual << "\n";
    }
  }
  return report.failed() ? kExitFails : kExitHolds;
}

struct SuiteOptions {
  std::string expr;
  bool all = false;
  std::optional<int> grid;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
};

void print_suite_text(std::ostream& out, const fieq::SuiteReport& s) {
  out << s.implication << "\n";
  out << "  observed: " << (s.observed_violation() ? "violates IE" : "no violation found");
  if (s.witness) {
    out << " at (" << s.witness->x << ", " << s.witness->y << "), residual " << s.witness->residual;
  }
  out << "\n";
  for (const auto& id : s.identities) {
    out << "  identity " << id.construction << ": deviation " << id.max_deviation
        << (id.agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (s.rows.empty()) out << "  no theorem applies\n";
  for (const auto& row : s.rows) {
    out << "  " << row.theorem << " [" << row.hypothesis << ", via " << row.via << "]: predicted "
        << fieq::to_string(row.predicted) << " -> " << (row.consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
  }
}

int run_suite(const SuiteOptions& o) {
  std::vector<fieq::Implication> targets;
  if (o.all) {
    targets = fieq::registered_named();
  } else {
    if (o.expr.empty()) throw Usage("suite needs an expression or --all");
    targets.push_back(fieq::parse_implication(o.expr));
  }
  std::vector<fieq::SuiteReport> reports;
  for (const auto& imp : targets) {
    require_implication(imp);
    reports.push_back(fieq::theorem_suite(imp, o.grid.value_or(fieq::kDefaultGrid),
                                          o.tol.value_or(fieq::default_tolerance(imp))));
  }
  Sink sink(o.out);
  std::ostream& out = sink.stream();
  if (o.format == "json") {
    nlohmann::json doc;
    if (o.all) {
      doc = nlohmann::json::array();
      for (const auto& r : reports) doc.push_back(fieq::suite_json(r));
    } else {
      doc = fieq::suite_json(reports.front());
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_suite_text(out, r);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_consistent();
  return ok ? kExitHolds : kExitFails;
}

int run_props(const std::string& expr, std::optional<int> grid, std::optional<double> tol) {
  const fieq::Implication imp = fieq::parse_implication(expr);
  require_implication(imp);
  const auto flags =
      fieq::assess_properties(imp, grid.value_or(fieq::kDefaultGrid), tol.value_or(fieq::default_tolerance(imp)));
  std::cout << fieq::properties_json(flags, imp.name()).dump(2) << "\n";
  return kExitHolds;
}

int run_enumerate(int n, const std::string& what, const std::string& out_path) {
  if (n < 1 || n > fieq::kMaxChain) throw Usage("chain resolution must lie in [1,3]");
  std::vector<fieq::FiniteImplication> listed;
  std::uint64_t total = 0;
  std::uint64_t idempotent_count = 0;
  std::uint64_t op_count = 0;
  fieq::for_each_implication(n, [&](const fieq::FiniteImplication& a) {
    ++total;
    const bool idem = fieq::is_idempotent(a);
    if (idem) ++idempotent_count;
    const bool op = fieq::has_op(a);
    if (op) ++op_count;
    if (what == "all" || (what == "idempotents" && idem) || (what == "op-theorem" && op)) listed.push_back(a);
  });
  nlohmann::json summary = {{"n", n}, {"total", total}, {"idempotent_count", idempotent_count}};
  int status = kExitHolds;
  if (what == "op-theorem") {
    const fieq::CheckReport r = fieq::verify_op_np_theorem(n);
    summary["op_count"] = op_count;
    summary["counterexamples"] = static_cast<std::uint64_t>(r.max_residual);
    summary["verdict"] = fieq::to_string(r.verdict);
    if (r.failed()) status = kExitFails;
  }
  summary["listed"] = listed.size();

  if (!out_path.empty()) {
    Sink matrices(out_path);
    for (const auto& a : listed) matrices.stream() << a.serialize() << "\n";
    Sink json(out_path + ".json");
    json.stream() << summary.dump(2) << "\n";
  } else {
    for (const auto& a : listed) std::cout << a.serialize() << "\n";
  }
  std::cout << summary.dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the functional equation I(I(y,x),I(x,y)) = I(x,y) for fuzzy implications"};
  app.require_subcommand(1);


  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check one equation or property");
  check_cmd->add_option("expr", check.expr, "Implication expression, e.g. \"r(tnorm:product)\"")->required();
  check_cmd->add_option("--eq", check.eq, "axioms|ie|np|op|ip|ep|np-range")
      ->check(CLI::IsMember({"axioms", "ie", "np", "op", "ip", "ep", "np-range"}));
  check_cmd->add_option("--grid", check.grid, "Grid resolution n (points i/n)")->check(CLI::Range(2, 1 << 16));
  check_cmd->add_option("--tol", check.tol, "Tolerance (default 1e-9, 1e-6 for bisection-backed expressions)")
      ->check(CLI::Range(0.0, 1.0));
  check_cmd->add_option("--format", check.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  check_cmd->add_option("--out", check.out, "Write the report to a file");

  SuiteOptions suite;
  auto* suite_cmd = app.add_subcommand("suite", "Predicted vs observed IE verdicts for every applicable theorem");
  suite_cmd->add_option("expr", suite.expr, "Implication expression");
  suite_cmd->add_flag("--all", suite.all, "Run over the full named registry");
  suite_cmd->add_option("--grid", suite.grid, "Grid resolution")->check(CLI::Range(2, 1 << 16));
  suite_cmd->add_option("--tol", suite.tol, "Tolerance")->check(CLI::Range(0.0, 1.0));
  suite_cmd->add_option("--format", suite.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  suite_cmd->add_option("--out", suite.out, "Write the report to a file");

  std::string props_expr;
  std::optional<int> props_grid;
  std::optional<double> props_tol;
  auto* props_cmd = app.add_subcommand("props", "Property report (axioms, NP, OP, IP, EP, NP on range, IE)");
  props_cmd->add_option("expr", props_expr, "Implication expression")->required();
  props_cmd->add_option("--grid", props_grid, "Grid resolution")->check(CLI::Range(2, 1 << 16));
  props_cmd->add_option("--tol", props_tol, "Tolerance")->check(CLI::Range(0.0, 1.0));

  int chain_n = 0;
  std::string what = "all";
  std::string enum_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive enumeration on the chain L_n");
  enum_cmd->add_option("n", chain_n, "Chain resolution (1..3)")->required();
  enum_cmd->add_option("--what", what, "all|idempotents|op-theorem")
      ->check(CLI::IsMember({"all", "idempotents", "op-theorem"}));
  enum_cmd->add_option("--out", enum_out, "Matrix file; the summary goes to <out>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*suite_cmd) return run_suite(suite);
    if (*props_cmd) return run_props(props_expr, props_grid, props_tol);
    if (*enum_cmd) return run_enumerate(chain_n, what, enum_out);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fieq::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fieq::UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fieq::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fieq::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

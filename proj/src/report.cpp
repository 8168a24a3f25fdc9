#include "fieq/report.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "fieq/detail/sweep.hpp"
#include "fieq/errors.hpp"

namespace fieq {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::consistent: return "consistent-at-resolution";
  }
  return "?";
}

std::optional<Witness> CheckReport::witness() const {
  if (!failed() || worst_point.size() != 2) return std::nullopt;
  return Witness{worst_point[0], worst_point[1], lhs, rhs, max_residual};
}

void validate_grid(int grid_n, double tol) {
  if (grid_n < 2) throw InputError("grid_n must be at least 2, got " + std::to_string(grid_n));
  if (!(tol > 0.0 && tol < 1.0)) throw InputError("tol must lie in (0,1), got " + std::to_string(tol));
}

unsigned worker_count() {
  if (const char* env = std::getenv("FIEQ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

CheckReport finish(const Sample& best, std::uint64_t samples, int grid_n, double tol, Verdict pass) {
  CheckReport r;
  r.max_residual = best.residual < 0.0 ? 0.0 : best.residual;
  r.worst_point.assign(best.point.begin(), best.point.begin() + best.dims);
  r.lhs = best.lhs;
  r.rhs = best.rhs;
  r.condition = std::string(best.condition);
  r.samples = samples;
  r.grid_n = grid_n;
  r.tol = tol;
  r.verdict = r.max_residual > tol ? Verdict::fails : pass;
  return r;
}

}  // namespace detail
}  // namespace fieq

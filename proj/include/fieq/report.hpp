#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fieq {

inline constexpr int kDefaultGrid = 128;       // two-variable sweeps
inline constexpr int kDefaultGrid3 = 32;       // three-variable sweeps
inline constexpr double kClosedFormTol = 1e-9;
inline constexpr double kBisectionTol = 1e-6;  // anything built on a numeric inverse or sup

/// holds: passed, and the check is exact or a predicate verified on its grid.
/// consistent: a sweep over a continuum found no violation; not a proof.
enum class Verdict { holds, fails, consistent };

std::string_view to_string(Verdict v) noexcept;

struct Witness {
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct CheckReport {
  Verdict verdict = Verdict::holds;
  double max_residual = 0.0;
  std::vector<double> worst_point;  // attains max_residual; lexicographically smallest on ties
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  std::string condition;  // sub-check that produced worst_point
  std::uint64_t samples = 0;
  int grid_n = 0;
  double tol = 0.0;

  bool failed() const noexcept { return verdict == Verdict::fails; }
  bool passed() const noexcept { return verdict != Verdict::fails; }

  /// Present when the report failed at a two-coordinate point.
  std::optional<Witness> witness() const;
};

/// Validates the common sweep parameters; throws InputError.
void validate_grid(int grid_n, double tol);

/// i-th point of G_n = {0, 1/n, ..., 1}.
inline double grid_point(int i, int n) noexcept {
  return static_cast<double>(i) / static_cast<double>(n);
}

/// Worker count for grid sweeps: FIEQ_THREADS when set and positive,
/// otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace fieq

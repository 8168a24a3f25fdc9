#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <thread>
#include <vector>

#include "fieq/report.hpp"

namespace fieq::detail {

struct Sample {
  double residual = -1.0;  // -1 marks "no sample yet"
  std::array<double, 3> point{};
  std::uint8_t dims = 0;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  std::string_view condition;
};

inline double sanitize(double r) noexcept {
  return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
}

/// Strict total order used by every reduction: larger residual first, then the
/// lexicographically smaller point. Makes the result independent of how the
/// work was partitioned.
inline bool ranks_before(const Sample& a, const Sample& b) noexcept {
  if (a.residual != b.residual) return a.residual > b.residual;
  const std::size_t d = std::max(a.dims, b.dims);
  for (std::size_t k = 0; k < d; ++k) {
    if (a.point[k] != b.point[k]) return a.point[k] < b.point[k];
  }
  return a.dims < b.dims;
}

inline void offer(Sample& best, const Sample& candidate) noexcept {
  if (ranks_before(candidate, best)) best = candidate;
}

inline Sample make_sample(double residual, std::initializer_list<double> pt,
                          std::string_view condition, double lhs = std::numeric_limits<double>::quiet_NaN(),
                          double rhs = std::numeric_limits<double>::quiet_NaN()) noexcept {
  Sample s;
  s.residual = sanitize(residual);
  s.dims = static_cast<std::uint8_t>(pt.size());
  std::copy(pt.begin(), pt.end(), s.point.begin());
  s.lhs = lhs;
  s.rhs = rhs;
  s.condition = condition;
  return s;
}

/// Runs task(k) for k in [0, count) across worker threads; each task returns
/// its best Sample. Returns the best overall.
template <class Task>
Sample reduce_parallel(std::size_t count, Task&& task) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<Sample> partial(workers);
  auto run = [&](std::size_t w) {
    Sample best;
    for (std::size_t k = w; k < count; k += workers) offer(best, task(k));
    partial[w] = best;
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Sample best;
  for (const auto& p : partial) offer(best, p);
  return best;
}

/// Turns a reduced sample into a report. A residual above tol fails; otherwise
/// the verdict is `pass`.
CheckReport finish(const Sample& best, std::uint64_t samples, int grid_n, double tol, Verdict pass);

}  // namespace fieq::detail

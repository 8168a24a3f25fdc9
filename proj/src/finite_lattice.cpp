#include "fieq/finite_lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fieq/errors.hpp"

namespace fieq {
namespace {

void require_budget(int n) {
  if (n < 1 || n > kMaxChain) {
    throw BudgetError("chain resolution must lie in [1," + std::to_string(kMaxChain) + "], got " + std::to_string(n));
  }
}

std::size_t cell(int n, int i, int j) { return static_cast<std::size_t>(i * (n + 1) + j); }

// Depth-first fill in row-major order. Each cell ranges over the values
// allowed by its left neighbour (I2) and upper neighbour (I1); corners are
// pinned by (I3). Ascending values give lexicographic output.
void fill(int n, std::size_t pos, std::vector<std::uint8_t>& t,
          const std::function<void(const FiniteImplication&)>& visit) {
  const int side = n + 1;
  if (pos == t.size()) {
    visit(FiniteImplication(n, t));
    return;
  }
  const int i = static_cast<int>(pos) / side;
  const int j = static_cast<int>(pos) % side;
  int lo = j > 0 ? t[pos - 1] : 0;
  int hi = i > 0 ? t[pos - static_cast<std::size_t>(side)] : n;
  if (i == 0 && j == 0) lo = n;
  if (i == n && j == n) lo = n;
  if (i == n && j == 0) hi = 0;
  for (int v = lo; v <= hi; ++v) {
    t[pos] = static_cast<std::uint8_t>(v);
    fill(n, pos + 1, t, visit);
  }
}

}  // namespace

FiniteImplication::FiniteImplication(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  if (n < 1) throw InputError("chain resolution must be positive");
  if (!valid(n, table_)) throw InputError("table is not a fuzzy implication on L_" + std::to_string(n));
}

bool FiniteImplication::valid(int n, std::span<const std::uint8_t> t) noexcept {
  const int side = n + 1;
  if (n < 1 || t.size() != static_cast<std::size_t>(side * side)) return false;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const int v = t[cell(n, i, j)];
      if (v > n) return false;
      if (i + 1 < side && t[cell(n, i + 1, j)] > v) return false;  // I1
      if (j + 1 < side && t[cell(n, i, j + 1)] < v) return false;  // I2
    }
  }
  return t[cell(n, 0, 0)] == n && t[cell(n, n, n)] == n && t[cell(n, n, 0)] == 0;  // I3
}

std::string FiniteImplication::serialize() const {
  std::string out;
  out.reserve(table_.size());
  for (auto v : table_) out.push_back(static_cast<char>('0' + v));
  return out;
}

FiniteImplication FiniteImplication::parse(int n, std::string_view digits) {
  std::vector<std::uint8_t> t;
  t.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("non-digit in serialized table");
    t.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return FiniteImplication(n, std::move(t));
}

void for_each_implication(int n, const std::function<void(const FiniteImplication&)>& visit) {
  require_budget(n);
  std::vector<std::uint8_t> t(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  fill(n, 0, t, visit);
}

std::vector<FiniteImplication> enumerate_implications(int n) {
  std::vector<FiniteImplication> out;
  for_each_implication(n, [&](const FiniteImplication& a) { out.push_back(a); });
  return out;
}

FiniteImplication nabla_finite(const FiniteImplication& a, const FiniteImplication& b) {
  if (a.n() != b.n()) throw InputError("nabla_finite: chain resolutions differ");
  const int side = a.size();
  std::vector<std::uint8_t> t(static_cast<std::size_t>(side * side));
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      t[cell(a.n(), i, j)] = static_cast<std::uint8_t>(a.at(b.at(j, i), b.at(i, j)));
    }
  }
  return FiniteImplication(a.n(), std::move(t));
}

bool is_idempotent(const FiniteImplication& a) { return nabla_finite(a, a) == a; }

bool satisfies_ie(const FiniteImplication& a) {
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.at(a.at(j, i), a.at(i, j)) != a.at(i, j)) return false;
    }
  }
  return true;
}

bool has_op(const FiniteImplication& a) {
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if ((a.at(i, j) == a.n()) != (i <= j)) return false;
    }
  }
  return true;
}

bool has_np_on_range(const FiniteImplication& a) {
  for (auto v : a.table()) {
    if (a.at(a.n(), v) != v) return false;
  }
  return true;
}

std::vector<FiniteImplication> idempotents(int n) {
  std::vector<FiniteImplication> out;
  for_each_implication(n, [&](const FiniteImplication& a) {
    if (is_idempotent(a)) out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport verify_op_np_theorem(int n) {
  require_budget(n);
  std::uint64_t examined = 0;
  std::uint64_t counterexamples = 0;
  std::string first_counterexample;
  for_each_implication(n, [&](const FiniteImplication& a) {
    if (!has_op(a)) return;
    ++examined;
    if (is_idempotent(a) != has_np_on_range(a)) {
      if (counterexamples++ == 0) first_counterexample = a.serialize();
    }
  });
  CheckReport r;
  r.verdict = counterexamples == 0 ? Verdict::holds : Verdict::fails;
  r.max_residual = static_cast<double>(counterexamples);
  r.samples = examined;
  r.grid_n = n;
  r.tol = 0.5;
  r.condition = counterexamples == 0 ? "OP => (IE <=> NP on range)" : "counterexample " + first_counterexample;
  return r;
}

bool is_tnorm_table(int n, std::span<const std::uint8_t> t) noexcept {
  const int side = n + 1;
  if (n < 1 || t.size() != static_cast<std::size_t>(side * side)) return false;
  auto at = [&](int i, int j) { return static_cast<int>(t[cell(n, i, j)]); };
  for (int i = 0; i < side; ++i) {
    if (at(i, n) != i) return false;  // neutral element
    for (int j = 0; j < side; ++j) {
      if (at(i, j) > n || at(i, j) != at(j, i)) return false;
      if (j + 1 < side && at(i, j) > at(i, j + 1)) return false;
      for (int k = 0; k < side; ++k) {
        if (at(at(i, j), k) != at(i, at(j, k))) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<std::uint8_t>> enumerate_tnorm_tables(int n) {
  require_budget(n);
  const int side = n + 1;
  // Free cells: the upper triangle with 0 < i <= j < n; the rest is fixed by
  // T(0,x)=0, T(x,1)=x and symmetry.
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) free_cells.emplace_back(i, j);
  }
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> t(static_cast<std::size_t>(side * side), 0);
  for (int i = 0; i < side; ++i) {
    t[cell(n, i, n)] = static_cast<std::uint8_t>(i);
    t[cell(n, n, i)] = static_cast<std::uint8_t>(i);
  }
  std::size_t combos = 1;
  for (std::size_t k = 0; k < free_cells.size(); ++k) combos *= static_cast<std::size_t>(side);
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t rest = code;
    for (const auto& [i, j] : free_cells) {
      const auto v = static_cast<std::uint8_t>(rest % static_cast<std::size_t>(side));
      rest /= static_cast<std::size_t>(side);
      t[cell(n, i, j)] = v;
      t[cell(n, j, i)] = v;
    }
    if (is_tnorm_table(n, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteImplication residuum_finite(int n, std::span<const std::uint8_t> tnorm_table) {
  if (!is_tnorm_table(n, tnorm_table)) throw InputError("not a t-norm table on L_" + std::to_string(n));
  const int side = n + 1;
  std::vector<std::uint8_t> t(static_cast<std::size_t>(side * side));
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      int best = 0;
      for (int k = 0; k < side; ++k) {
        if (tnorm_table[cell(n, i, k)] <= j) best = k;
      }
      t[cell(n, i, j)] = static_cast<std::uint8_t>(best);
    }
  }
  return FiniteImplication(n, std::move(t));
}

}  // namespace fieq

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fieq/report.hpp"

namespace fieq {

inline constexpr int kMaxChain = 3;

/// A fuzzy implication on the chain L_n = {0, 1/n, ..., 1}, stored as chain
/// indices: at(i, j) = k means I(i/n, j/n) = k/n.
class FiniteImplication {
 public:
  /// Validates (I1)-(I3) exactly; throws InputError.
  FiniteImplication(int n, std::vector<std::uint8_t> table);

  int n() const noexcept { return n_; }
  int size() const noexcept { return n_ + 1; }
  int at(int i, int j) const noexcept { return table_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  /// Row-major digits, e.g. "222122012" for n=2.
  std::string serialize() const;
  static FiniteImplication parse(int n, std::string_view digits);

  /// Exact check of the implication axioms on a raw table.
  static bool valid(int n, std::span<const std::uint8_t> table) noexcept;

  friend bool operator==(const FiniteImplication&, const FiniteImplication&) = default;
  friend auto operator<=>(const FiniteImplication&, const FiniteImplication&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

/// Visits every implication on L_n exactly once, in lexicographic order of
/// the row-major table. Throws BudgetError unless 1 <= n <= kMaxChain.
void for_each_implication(int n, const std::function<void(const FiniteImplication&)>& visit);
std::vector<FiniteImplication> enumerate_implications(int n);

/// (A nabla B)[i][j] = A[B[j][i]][B[i][j]]. Throws InputError on mismatched n.
FiniteImplication nabla_finite(const FiniteImplication& a, const FiniteImplication& b);

bool is_idempotent(const FiniteImplication& a);

/// A[A[j][i]][A[i][j]] == A[i][j] everywhere, written out directly.
bool satisfies_ie(const FiniteImplication& a);

/// Exact OP: A[i][j] == n iff i <= j.
bool has_op(const FiniteImplication& a);

/// Exact NP on the set of values the table takes.
bool has_np_on_range(const FiniteImplication& a);

/// All A with A nabla A == A, sorted.
std::vector<FiniteImplication> idempotents(int n);

/// Over every implication on L_n with exact OP: idempotent iff NP on range.
/// holds when no counterexample exists; samples counts the OP implications,
/// worst_point is empty, max_residual counts counterexamples.
CheckReport verify_op_np_theorem(int n);

/// Exact t-norm axioms on a (n+1)x(n+1) row-major table of chain indices.
bool is_tnorm_table(int n, std::span<const std::uint8_t> table) noexcept;

/// Every t-norm table on L_n, lexicographic. Throws BudgetError beyond kMaxChain.
std::vector<std::vector<std::uint8_t>> enumerate_tnorm_tables(int n);

/// entry[i][j] = max{k : T[i][k] <= j}. Throws InputError on an invalid table.
FiniteImplication residuum_finite(int n, std::span<const std::uint8_t> tnorm_table);

}  // namespace fieq

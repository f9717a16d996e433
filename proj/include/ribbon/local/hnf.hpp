#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ribbon/local/poly.hpp"

namespace ribbon::local {

using PolyRow = std::vector<Poly>;
using PolyMatrix = std::vector<PolyRow>;

namespace detail {

inline void axpy_row(PolyRow& target, const Poly& q, const PolyRow& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = target[j] - q * source[j];
}

inline bool row_is_zero(const PolyRow& row) {
  return std::all_of(row.begin(), row.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace detail

/// Row Hermite normal form of the F_p[s]-row-module spanned by `rows`:
/// echelon shape, monic pivots, entries above each pivot reduced modulo it,
/// zero rows dropped. Two row sets span the same module iff their forms agree.
inline PolyMatrix hermite_form(PolyMatrix rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), detail::row_is_zero), rows.end());
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` below pivot_row until at most one entry survives.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        if (!best || rows[i][col].degree() < rows[*best][col].degree()) best = i;
      }
      if (!best) break;
      std::swap(rows[pivot_row], rows[*best]);
      bool reduced_any = false;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col].is_zero()) continue;
        const Poly q = divmod(rows[i][col], rows[pivot_row][col]).first;
        detail::axpy_row(rows[i], q, rows[pivot_row]);
        reduced_any = true;
      }
      if (!reduced_any) break;
    }
    if (rows[pivot_row][col].is_zero()) continue;

    const Elem inv = rows[pivot_row][col].field().inv(rows[pivot_row][col].lead());
    for (auto& entry : rows[pivot_row]) entry = entry.scaled(inv);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Poly q = divmod(rows[i][col], rows[pivot_row][col]).first;
      if (!q.is_zero()) detail::axpy_row(rows[i], q, rows[pivot_row]);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

}  // namespace ribbon::local

// Copyright 2026 The gpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPD_LINEAR_SYSTEM_HPP
#define GPD_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

/*
 * Gauss-Jordan elimination over Rat for A x = b, A of shape m x n.
 *
 * Returns the solution only when it exists and is unique (rank n).
 * Inconsistent and underdetermined systems both yield nullopt.  Pivots are
 * chosen as the first nonzero entry in the column; with exact arithmetic no
 * magnitude pivoting is needed.
 */
inline std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_unique: rhs length mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve_unique: ragged matrix");
  }
  if (m < n) return std::nullopt;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = pivot_row;
    while (found < m && a[found][col].is_zero()) ++found;
    if (found == m) return std::nullopt;  // free column
    std::swap(a[found], a[pivot_row]);
    std::swap(b[found], b[pivot_row]);

    const Rat inv = Rat(1) / a[pivot_row][col];
    for (std::size_t k = col; k < n; ++k) a[pivot_row][k] *= inv;
    b[pivot_row] *= inv;

    for (std::size_t r = 0; r < m; ++r) {
      if (r == pivot_row || a[r][col].is_zero()) continue;
      const Rat factor = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[pivot_row][k];
      b[r] -= factor * b[pivot_row];
    }
    ++pivot_row;
  }
  // Remaining rows are all-zero on the left; they must be zero on the right.
  for (std::size_t r = n; r < m; ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  b.resize(n);
  return b;
}

}  // namespace gpd

#endif  // GPD_LINEAR_SYSTEM_HPP

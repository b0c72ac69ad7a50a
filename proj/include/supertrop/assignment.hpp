#pragma once

// Maximum-weight perfect matching on a complete bipartite n x n graph with
// optionally forbidden edges (Hungarian method with row/column potentials,
// O(n^3)). The weight type only needs +, -, < and ==, so exact types work.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace supertrop {

template <class T> struct Assignment {
  T value;
  std::vector<std::size_t> col_of_row;
};

/// `weight(i, j)` returns std::optional<T>; nullopt marks a forbidden edge.
/// Returns nullopt when no perfect matching avoids the forbidden edges.
template <class T, class WeightFn>
std::optional<Assignment<T>> max_weight_assignment(std::size_t n,
                                                   WeightFn &&weight) {
  if (n == 0)
    return Assignment<T>{T{}, {}};

  // Minimise cost = -weight; 1-based with column 0 as the virtual root.
  std::vector<std::optional<T>> cost(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::optional<T> w = weight(i, j))
        cost[i * n + j] = T{} - *w;

  std::vector<T> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<char> reached(n + 1), used(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::optional<T> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j])
          continue;
        if (const auto &c = cost[(i0 - 1) * n + (j - 1)]) {
          T cur = *c - u[i0] - v[j];
          if (!reached[j] || cur < minv[j]) {
            minv[j] = cur;
            reached[j] = 1;
            way[j] = j0;
          }
        }
        if (reached[j] && (!delta || minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!delta)
        return std::nullopt; // alternating tree is stuck: Hall violation
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (reached[j]) {
          minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment<T> out{T{}, std::vector<std::size_t>(n)};
  for (std::size_t j = 1; j <= n; ++j)
    out.col_of_row[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i)
    out.value += *weight(i, out.col_of_row[i]);
  return out;
}

} // namespace supertrop

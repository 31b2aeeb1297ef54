#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library's BFS, product construction and subset enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "qwl/graph.hpp"

namespace qwl::testing {

// All-pairs distances by Floyd-Warshall on an adjacency matrix.
inline std::vector<std::vector<int>> floyd_warshall(const LabeledGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Adjacency in Q_n^3 decided digit by digit.
inline bool ternary_adjacent(int n, std::uint32_t a, std::uint32_t b) {
  int differing = 0;
  for (int i = 0; i < n; ++i, a /= 3, b /= 3) differing += (a % 3 != b % 3) ? 1 : 0;
  return differing == 1;
}

// Maximum induced edge count over all k-subsets by recursive choice.
inline std::int64_t max_induced_recursive(const LabeledGraph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> chosen;
  std::int64_t best = 0;
  std::function<void(int, std::int64_t)> go = [&](int next, std::int64_t induced) {
    if (static_cast<int>(chosen.size()) == k) {
      best = std::max(best, induced);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(chosen.size())); ++v) {
      std::int64_t added = 0;
      for (int c : chosen) added += g.has_edge(c, v) ? 1 : 0;
      chosen.push_back(v);
      go(v + 1, induced + added);
      chosen.pop_back();
    }
  };
  go(0, 0);
  return best;
}

}  // namespace qwl::testing

#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// fast paths (BFS distance table, endpoint tests, sphere intersections) so they
// can serve as independent checks.

#include <algorithm>
#include <limits>
#include <vector>

#include "kmetric/graph.hpp"

namespace kmetric::oracle {

inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

using DistanceTable = std::vector<std::vector<int>>;

inline DistanceTable floyd_warshall(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  DistanceTable d(n, std::vector<int>(n, kUnreachable));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) d[u][static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// min over pairs of |{z : d(x,z) != d(y,z)}|.
inline int naive_dimension(const Graph& g) {
  const auto d = floyd_warshall(g);
  const auto n = d.size();
  int best = std::numeric_limits<int>::max();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      int count = 0;
      for (std::size_t z = 0; z < n; ++z) count += d[x][z] != d[y][z];
      best = std::min(best, count);
    }
  }
  return best;
}

/// Every shortest path between distinct vertices, one orientation each
/// (front < back).
inline std::vector<std::vector<Vertex>> all_geodesics(const Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  // Extend walks step by step, keeping only those that stay shortest.
  auto extend = [&](auto&& self, Vertex target) -> void {
    const Vertex tail = path.back();
    if (tail == target) {
      out.push_back(path);
      return;
    }
    for (Vertex x : g.neighbors(tail)) {
      const auto len = static_cast<int>(path.size());
      if (d[static_cast<std::size_t>(path.front())][static_cast<std::size_t>(x)] == len &&
          d[static_cast<std::size_t>(x)][static_cast<std::size_t>(target)] ==
              d[static_cast<std::size_t>(path.front())][static_cast<std::size_t>(target)] - len) {
        path.push_back(x);
        self(self, target);
        path.pop_back();
      }
    }
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] >= kUnreachable) continue;
      path = {u};
      extend(extend, v);
    }
  }
  return out;
}

namespace detail {

inline bool contains_run(const std::vector<Vertex>& longer, const std::vector<Vertex>& shorter) {
  if (shorter.size() > longer.size()) return false;
  auto forward = std::search(longer.begin(), longer.end(), shorter.begin(), shorter.end());
  if (forward != longer.end()) return true;
  auto backward = std::search(longer.begin(), longer.end(), shorter.rbegin(), shorter.rend());
  return backward != longer.end();
}

}  // namespace detail

/// Geodesics not contained (as a contiguous run, either direction) in any
/// strictly longer geodesic.
inline std::vector<std::vector<Vertex>> maximal_geodesics(const Graph& g) {
  const auto all = all_geodesics(g);
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : all) {
    const bool covered = std::any_of(all.begin(), all.end(), [&](const auto& q) {
      return q.size() > p.size() && detail::contains_run(q, p);
    });
    if (!covered) out.push_back(p);
  }
  return out;
}

/// Length of a shortest maximal geodesic, or -1 when the graph has fewer than
/// two vertices.
inline int shortest_maximal_geodesic_length(const Graph& g) {
  int best = -1;
  for (const auto& p : maximal_geodesics(g)) {
    const int len = static_cast<int>(p.size()) - 1;
    if (best < 0 || len < best) best = len;
  }
  return best;
}

}  // namespace kmetric::oracle

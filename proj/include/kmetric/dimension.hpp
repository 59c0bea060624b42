#pragma once

#include <span>
#include <vector>

#include "kmetric/distance.hpp"
#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// Vertices that see x and y at different distances.
struct DistinctiveSet {
  VertexPair pair;
  VertexSet members;
};

/// Dim(G): the largest k admitting a k-metric generator, together with the
/// lexicographically smallest pair whose distinctive set realizes it.
struct DimensionReport {
  int k = 0;
  VertexPair witness_pair;
  DistinctiveSet witness_set;
};

inline DistinctiveSet distinctive_set(const Graph& g, const DistanceMatrix& dm, Vertex x, Vertex y) {
  (void)g;
  detail::require_connected(dm);
  detail::require_vertex(dm, x);
  detail::require_vertex(dm, y);
  if (x == y) throw Error(Errc::SamePair, "distinctive set of (" + std::to_string(x) + "," + std::to_string(x) + ")");
  DistinctiveSet out{ordered(x, y), {}};
  const auto rx = dm.row(x);
  const auto ry = dm.row(y);
  for (Vertex z = 0; z < dm.order(); ++z) {
    if (rx[static_cast<std::size_t>(z)] != ry[static_cast<std::size_t>(z)]) out.members.push_back(z);
  }
  return out;
}

inline int distinctive_count(const DistanceMatrix& dm, Vertex x, Vertex y) {
  const auto rx = dm.row(x);
  const auto ry = dm.row(y);
  int count = 0;
  for (std::size_t z = 0; z < rx.size(); ++z) count += rx[z] != ry[z];
  return count;
}

/// The minimum of |D(x, y)| over unordered pairs is exactly the dimensionality.
inline DimensionReport metric_dimensionality(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  const int n = dm.order();
  if (n < 2) throw Error(Errc::TooSmall, "dimensionality needs at least two vertices");
  int best = n + 1;
  VertexPair witness;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const int count = distinctive_count(dm, x, y);
      if (count < best) {
        best = count;
        witness = {x, y};
      }
    }
  }
  return {best, witness, distinctive_set(g, dm, witness.first, witness.second)};
}

/// True when every pair of distinct vertices is resolved by at least k
/// members of s.
inline bool is_k_metric_generator(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> s, int k) {
  detail::require_connected(dm);
  const auto in_s = detail::vertex_mask(g, s);
  const int n = dm.order();
  for (Vertex x = 0; x < n; ++x) {
    const auto rx = dm.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      const auto ry = dm.row(y);
      int count = 0;
      for (std::size_t z = 0; z < rx.size() && count < k; ++z) count += in_s[z] && rx[z] != ry[z];
      if (count < k) return false;
    }
  }
  return true;
}

}  // namespace kmetric

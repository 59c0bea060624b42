#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "kmetric/distance.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// Ball N(v,m), sphere S(v,m) and boundary dN(v,m) (sphere vertices with a
/// neighbor outside the ball).
struct BoundaryProfile {
  Vertex center = 0;
  int radius = 0;
  VertexSet ball;
  VertexSet sphere;
  VertexSet boundary;
};

struct EtaWitness {
  int radius = 0;
  VertexPair pair;
};

/// eta(G) over all radii; empty when no pair of vertices has equal boundary
/// at any radius.
struct EtaReport {
  std::optional<int> eta;
  std::optional<EtaWitness> witness;
  std::map<int, std::vector<VertexPair>> equal_boundary_pairs;  // only non-empty radii

  bool any_equal_boundary() const { return !equal_boundary_pairs.empty(); }
};

namespace detail {

inline void require_radius(const DistanceMatrix& dm, int m, int lowest) {
  if (m < lowest || m > dm.diameter()) {
    throw Error(Errc::RadiusOutOfRange, "radius " + std::to_string(m) + " outside [" + std::to_string(lowest) +
                                            ", " + std::to_string(dm.diameter()) + "]");
  }
}

/// farther[v * n + w] != 0 iff w has a neighbor x with d(v,x) = d(v,w) + 1.
inline std::vector<char> farther_neighbor_table(const Graph& g, const DistanceMatrix& dm) {
  const auto n = static_cast<std::size_t>(dm.order());
  std::vector<char> table(n * n, 0);
  for (Vertex v = 0; v < dm.order(); ++v) {
    const auto row = dm.row(v);
    for (Vertex w = 0; w < dm.order(); ++w) {
      for (Vertex x : g.neighbors(w)) {
        if (row[static_cast<std::size_t>(x)] == row[static_cast<std::size_t>(w)] + 1) {
          table[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(w)] = 1;
          break;
        }
      }
    }
  }
  return table;
}

inline std::vector<VertexSet> boundaries_at(const DistanceMatrix& dm, const std::vector<char>& farther, int m) {
  const auto n = static_cast<std::size_t>(dm.order());
  std::vector<VertexSet> out(n);
  for (Vertex v = 0; v < dm.order(); ++v) {
    const auto row = dm.row(v);
    for (std::size_t w = 0; w < n; ++w) {
      if (row[w] == static_cast<Distance>(m) && farther[static_cast<std::size_t>(v) * n + w]) {
        out[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(w));
      }
    }
  }
  return out;
}

inline std::vector<VertexPair> pairs_with_equal_sets(const std::vector<VertexSet>& sets) {
  std::map<VertexSet, std::vector<Vertex>> groups;
  for (std::size_t v = 0; v < sets.size(); ++v) {
    if (!sets[v].empty()) groups[sets[v]].push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexPair> pairs;
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) pairs.push_back({members[i], members[j]});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace detail

inline BoundaryProfile boundary_profile(const Graph& g, const DistanceMatrix& dm, Vertex v, int m) {
  detail::require_connected(dm);
  detail::require_vertex(dm, v);
  detail::require_radius(dm, m, 0);
  BoundaryProfile out{v, m, {}, {}, {}};
  const auto row = dm.row(v);
  const auto radius = static_cast<Distance>(m);
  for (Vertex w = 0; w < dm.order(); ++w) {
    const Distance d = row[static_cast<std::size_t>(w)];
    if (d > radius) continue;
    out.ball.push_back(w);
    if (d != radius) continue;
    out.sphere.push_back(w);
    for (Vertex x : g.neighbors(w)) {
      if (row[static_cast<std::size_t>(x)] > radius) {
        out.boundary.push_back(w);
        break;
      }
    }
  }
  return out;
}

/// Unordered pairs (v, v') with dN(v,m) = dN(v',m) non-empty, sorted.
inline std::vector<VertexPair> equal_boundary_pairs(const Graph& g, const DistanceMatrix& dm, int m) {
  detail::require_connected(dm);
  if (m < 0 || m > dm.diameter()) return {};
  return detail::pairs_with_equal_sets(detail::boundaries_at(dm, detail::farther_neighbor_table(g, dm), m));
}

/// eta_m(v, v'): distinctive vertices of (v, v') inside N(v,m) u N(v',m).
inline int eta_value(const DistanceMatrix& dm, Vertex v, Vertex w, int m) {
  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  const auto radius = static_cast<Distance>(m);
  int count = 0;
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if ((rv[x] <= radius || rw[x] <= radius) && rv[x] != rw[x]) ++count;
  }
  return count;
}

inline bool balls_cover_graph(const DistanceMatrix& dm, Vertex v, Vertex w, int m) {
  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  const auto radius = static_cast<Distance>(m);
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if (rv[x] > radius && rw[x] > radius) return false;
  }
  return true;
}

/// Sweeps m = 0..diam; the witness is the lexicographically least (m, pair)
/// realizing the minimum.
inline EtaReport eta_bound(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  EtaReport out;
  const auto farther = detail::farther_neighbor_table(g, dm);
  for (int m = 0; m <= dm.diameter(); ++m) {
    auto pairs = detail::pairs_with_equal_sets(detail::boundaries_at(dm, farther, m));
    if (pairs.empty()) continue;
    for (const auto& p : pairs) {
      const int value = eta_value(dm, p.first, p.second, m);
      if (!out.eta || value < *out.eta) {
        out.eta = value;
        out.witness = EtaWitness{m, p};
      }
    }
    out.equal_boundary_pairs.emplace(m, std::move(pairs));
  }
  return out;
}

/// Vertices outside both m-balls are equidistant from v and v' whenever the
/// two have equal m-boundary. Returns whether that holds for this pair.
inline bool boundary_equidistance_holds(const Graph& g, const DistanceMatrix& dm, Vertex v, Vertex w, int m) {
  detail::require_connected(dm);
  detail::require_vertex(dm, v);
  detail::require_vertex(dm, w);
  if (v == w || m < 0 || m > dm.diameter()) {
    throw Error(Errc::NotEqualBoundary, "pair does not have equal boundary");
  }
  const auto bv = boundary_profile(g, dm, v, m).boundary;
  const auto bw = boundary_profile(g, dm, w, m).boundary;
  if (bv.empty() || bv != bw) throw Error(Errc::NotEqualBoundary, "pair does not have equal boundary");
  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  const auto radius = static_cast<Distance>(m);
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if (rv[x] > radius && rw[x] > radius && rv[x] != rw[x]) return false;
  }
  return true;
}

}  // namespace kmetric

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "kmetric/dimension.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// A terminal-to-terminal path through an exterior major vertex.
struct TerminalPath {
  Vertex major = 0;
  VertexPair terminals;
  int length = 0;
};

/// Major vertices (degree >= 3), their terminal vertices, and the sigma bound.
///
/// A leaf u is a terminal vertex of the major vertex v when v is strictly the
/// closest major vertex to u. `exterior_majors` holds the majors with at least
/// two terminals; sigma(w) is the shortest d(u_j, w) + d(w, u_r) over two
/// distinct terminals of w and `sigma` is the minimum over exterior majors.
struct LandmarkStructure {
  VertexSet major_vertices;
  std::map<Vertex, VertexSet> terminal_map;  // one entry per major vertex
  VertexSet exterior_majors;
  std::map<Vertex, int> sigma_of;
  std::optional<int> sigma;
  std::optional<TerminalPath> sigma_witness;

  int terminal_degree(Vertex v) const {
    auto it = terminal_map.find(v);
    return it == terminal_map.end() ? 0 : static_cast<int>(it->second.size());
  }
};

struct MaximalGeodesicReport {
  int length = 0;
  VertexPair witness_endpoints;
};

inline LandmarkStructure landmark_structure(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  const int n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "landmark structure needs at least two vertices");
  LandmarkStructure out;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      out.major_vertices.push_back(v);
      out.terminal_map[v];
    }
  }
  if (out.major_vertices.empty()) return out;

  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    Vertex closest = -1;
    Distance best = kInfinite;
    bool unique = false;
    for (Vertex m : out.major_vertices) {
      const Distance d = dm(u, m);
      if (d < best) {
        best = d;
        closest = m;
        unique = true;
      } else if (d == best) {
        unique = false;
      }
    }
    if (unique) out.terminal_map[closest].push_back(u);
  }

  for (const auto& [w, terminals] : out.terminal_map) {
    if (terminals.size() < 2) continue;
    out.exterior_majors.push_back(w);
    int best = -1;
    TerminalPath path{w, {}, 0};
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      for (std::size_t j = i + 1; j < terminals.size(); ++j) {
        const int len = static_cast<int>(dm(terminals[i], w) + dm(w, terminals[j]));
        if (best < 0 || len < best) {
          best = len;
          path.terminals = {terminals[i], terminals[j]};
        }
      }
    }
    path.length = best;
    out.sigma_of[w] = best;
    if (!out.sigma || best < *out.sigma) {
      out.sigma = best;
      out.sigma_witness = path;
    }
  }
  return out;
}

/// Dim(G) <= sigma(G) whenever some major vertex has two terminals.
inline bool sigma_upper_bound_holds(const LandmarkStructure& landmarks, const DimensionReport& dim) {
  if (!landmarks.sigma) throw Error(Errc::EmptyM, "no major vertex with two terminal vertices");
  return dim.k <= *landmarks.sigma;
}

/// True when the geodesic between u and v cannot be prolonged past either end.
/// A neighbor x of u prolongs it exactly when d(x, v) = d(u, v) + 1.
inline bool endpoint_maximal(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
  const Distance d = dm(u, v);
  for (Vertex x : g.neighbors(u)) {
    if (dm(x, v) == d + 1) return false;
  }
  for (Vertex y : g.neighbors(v)) {
    if (dm(u, y) == d + 1) return false;
  }
  return true;
}

/// A(G): the length of a shortest geodesic not contained in a longer one.
/// Witness is the lexicographically smallest endpoint pair among the shortest.
inline MaximalGeodesicReport shortest_maximal_geodesic(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  const int n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "maximal geodesics need at least two vertices");
  MaximalGeodesicReport out{-1, {}};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = static_cast<int>(dm(u, v));
      if (out.length >= 0 && d >= out.length) continue;
      if (endpoint_maximal(g, dm, u, v)) out = {d, {u, v}};
    }
  }
  return out;
}

inline int diameter_lower_bound(const DistanceMatrix& dm) {
  detail::require_connected(dm);
  const int diam = dm.diameter();
  return diam < 2 ? 0 : (diam - 2) / 4;
}

inline int diameter_lower_bound(const Graph& g, const DistanceMatrix& dm) {
  (void)g;
  return diameter_lower_bound(dm);
}

}  // namespace kmetric

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmetric/error.hpp"

namespace kmetric {

using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using Edge = VertexPair;

inline VertexPair ordered(Vertex u, Vertex v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Throws OutOfRange for endpoints outside [0, n) and SelfLoop for u == v.
  /// Repeated edges (in either orientation) collapse to one.
  Graph(int n, std::span<const Edge> edges) : adjacency_(checked_order(n)) {
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(Errc::OutOfRange, "edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") with n=" +
                                          std::to_string(n));
      }
      if (u == v) {
        throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
      }
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      edge_count_ += list.size();
    }
    edge_count_ /= 2;
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t checked_order(int n) {
    if (n < 0) throw Error(Errc::InvalidParams, "negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

namespace detail {

/// Labels connected components of the graph restricted to vertices with
/// blocked[v] == 0. Blocked vertices get label -1. Labels are assigned in
/// order of the smallest vertex of each component.
template <class EdgeFilter>
std::vector<int> label_components(const Graph& g, const std::vector<char>& blocked,
                                  EdgeFilter&& keep_edge, int* count = nullptr) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (blocked[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (blocked[static_cast<std::size_t>(w)] || label[static_cast<std::size_t>(w)] >= 0) continue;
        if (!keep_edge(u, w)) continue;
        label[static_cast<std::size_t>(w)] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

inline std::vector<VertexSet> group_labels(const std::vector<int>& label, int count) {
  std::vector<VertexSet> comps(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (label[v] >= 0) comps[static_cast<std::size_t>(label[v])].push_back(static_cast<Vertex>(v));
  }
  return comps;
}

inline std::vector<char> vertex_mask(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) {
    if (!g.contains(v)) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::EmptyGraph, "graph has no vertices");
  int count = 0;
  detail::label_components(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0),
                           [](Vertex, Vertex) { return true; }, &count);
  return count == 1;
}

/// Components of the subgraph induced on V \ removed, each sorted, ordered by
/// smallest member.
inline std::vector<VertexSet> components_after_vertex_removal(const Graph& g,
                                                              std::span<const Vertex> removed) {
  int count = 0;
  auto label = detail::label_components(g, detail::vertex_mask(g, removed),
                                        [](Vertex, Vertex) { return true; }, &count);
  return detail::group_labels(label, count);
}

/// Components of g with the given edges deleted; every vertex is kept.
inline std::vector<VertexSet> components_after_edge_removal(const Graph& g,
                                                            std::span<const Edge> removed) {
  std::vector<Edge> cut;
  cut.reserve(removed.size());
  for (const auto& [u, v] : removed) {
    if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) {
      throw Error(Errc::NotAnEdge,
                  "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    cut.push_back(ordered(u, v));
  }
  std::sort(cut.begin(), cut.end());
  int count = 0;
  auto label = detail::label_components(
      g, std::vector<char>(static_cast<std::size_t>(g.order()), 0),
      [&cut](Vertex u, Vertex w) { return !std::binary_search(cut.begin(), cut.end(), ordered(u, w)); },
      &count);
  return detail::group_labels(label, count);
}

/// All edges with both endpoints in `vertices`.
inline std::vector<Edge> induced_edges(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) out.push_back(ordered(vertices[i], vertices[j]));
    }
  }
  return out;
}

inline bool induces_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

inline bool set_contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace kmetric

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kmetric/edge_list.hpp"
#include "kmetric/generators.hpp"
#include "kmetric/graph.hpp"

namespace kmetric::corpus {

/// Every connected labelled graph on n vertices (n <= 6 keeps this under 2^15).
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) edges.push_back(slots[i]);
    }
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// A mixed seeded corpus: trees, block graphs and sparse random graphs.
inline std::vector<Graph> random_corpus(int count, int max_order) {
  std::vector<Graph> out;
  for (int s = 0; s < count; ++s) {
    const RandomSeed seed{static_cast<std::uint64_t>(s)};
    const int n = 2 + s % (max_order - 1);
    out.push_back(random_tree(n, seed));
    out.push_back(random_block_graph({.n = n}, seed));
    out.push_back(random_connected_graph(n, 0.25, seed));
  }
  return out;
}

/// Clique gluing along a chain: each new K_2 or K_3 is glued at a vertex of
/// the previous clique other than the one that clique was glued at, or (one
/// time in five) at any vertex. Yields far more non-tagged block graphs than
/// uniform anchoring.
inline Graph chain_block_graph(int target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<Edge> edges{{0, 1}};
  int order = 2;
  VertexSet last{0, 1};
  Vertex entry = 0;
  while (order < target) {
    const int size = std::min(pick(2, 3), target - order + 1);
    Vertex anchor = 0;
    if (pick(0, 4) == 0) {
      anchor = pick(0, order - 1);
    } else {
      VertexSet exits;
      for (Vertex v : last) {
        if (v != entry) exits.push_back(v);
      }
      anchor = exits[static_cast<std::size_t>(pick(0, static_cast<int>(exits.size()) - 1))];
    }
    VertexSet fresh{anchor};
    for (int i = 1; i < size; ++i) fresh.push_back(order++);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (std::size_t j = i + 1; j < fresh.size(); ++j) edges.push_back({fresh[i], fresh[j]});
    }
    last = fresh;
    entry = anchor;
  }
  return Graph(order, edges);
}

inline VertexSet vertex_set(std::initializer_list<Vertex> v) { return VertexSet(v); }

}  // namespace kmetric::corpus

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// Maximal biconnected components and cut vertices of a connected graph.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // each sorted; list in lexicographic order
  VertexSet cut_vertices;
  std::map<Edge, std::size_t> block_of_edge;  // keyed by (u, v) with u < v

  /// Indices of blocks containing v.
  std::vector<std::size_t> blocks_of(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (set_contains(blocks[i], v)) out.push_back(i);
    }
    return out;
  }

  bool is_cut_vertex(Vertex v) const { return set_contains(cut_vertices, v); }
};

/// Iterative lowpoint (Hopcroft-Tarjan) decomposition.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(Errc::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");

  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int time = 0;
  const Vertex root = 0;
  int root_children = 0;

  auto at = [](auto& vec, Vertex v) -> auto& { return vec[static_cast<std::size_t>(v)]; };

  at(disc, root) = at(low, root) = time++;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const Vertex v = frame.v;
    const auto nbrs = g.neighbors(v);
    if (frame.next < nbrs.size()) {
      const Vertex w = nbrs[frame.next++];
      if (at(disc, w) < 0) {
        at(parent, w) = v;
        at(disc, w) = at(low, w) = time++;
        edge_stack.push_back({v, w});
        if (v == root) ++root_children;
        stack.push_back({w, 0});
      } else if (w != at(parent, v) && at(disc, w) < at(disc, v)) {
        edge_stack.push_back({v, w});
        at(low, v) = std::min(at(low, v), at(disc, w));
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = at(parent, v);
    if (p < 0) continue;
    at(low, p) = std::min(at(low, p), at(low, v));
    if (at(low, v) >= at(disc, p)) {
      if (p != root) at(is_cut, p) = 1;
      VertexSet block;
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e.first == p && e.second == v) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      out.blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) at(is_cut, root) = 1;

  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v) {
    if (at(is_cut, v)) out.cut_vertices.push_back(v);
  }
  // Two vertices share at most one block, so each edge maps to the unique
  // block holding both endpoints.
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const auto& b = out.blocks[i];
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        if (g.adjacent(b[x], b[y])) out.block_of_edge.emplace(Edge{b[x], b[y]}, i);
      }
    }
  }
  return out;
}

}  // namespace kmetric

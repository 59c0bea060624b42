#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

struct RandomSeed {
  std::uint64_t value = 0;
};

enum class Family { Path, Cycle, Complete, Star, RandomTree, RandomBlock, RandomConnected };

inline constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::RandomTree: return "random_tree";
    case Family::RandomBlock: return "random_block";
    case Family::RandomConnected: return "random_connected";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star, Family::RandomTree,
                   Family::RandomBlock, Family::RandomConnected}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

inline constexpr bool is_randomized(Family f) noexcept {
  return f == Family::RandomTree || f == Family::RandomBlock || f == Family::RandomConnected;
}

/// Size parameters. `n` is the vertex count for every family except
/// random_block, where it is an optional target order: when n > 0 cliques are
/// glued until exactly n vertices exist (the last clique is shrunk to fit),
/// otherwise exactly `cliques` cliques are glued.
struct GeneratorParams {
  int n = 0;
  int cliques = 0;
  int clique_min = 2;
  int clique_max = 5;
  double edge_probability = 0.1;  // random_connected: chance of each extra edge
};

namespace detail {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline void add_clique_at(std::vector<Edge>& edges, int& order, Vertex anchor, int size) {
  std::vector<Vertex> members{anchor};
  for (int i = 1; i < size; ++i) members.push_back(order++);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) edges.push_back(ordered(members[a], members[b]));
  }
}

inline void require(bool ok, std::string_view what) {
  if (!ok) throw Error(Errc::InvalidParams, std::string(what));
}

}  // namespace detail

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(ordered(v, (v + 1) % n));
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

/// K_{1,n-1} with center 0.
inline Graph star_graph(int n) {
  detail::require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

/// Uniform attachment: vertex i joins a uniformly chosen vertex in [0, i).
inline Graph random_tree(int n, RandomSeed seed) {
  detail::require(n >= 1, "random_tree needs n >= 1");
  std::mt19937_64 rng(seed.value);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({detail::uniform_int(rng, 0, v - 1), v});
  return Graph(n, edges);
}

/// Clique-gluing construction: start from K_{n_1} and repeatedly identify one
/// vertex of a fresh K_{n_i} with a uniformly chosen existing vertex.
inline Graph random_block_graph(const GeneratorParams& p, RandomSeed seed) {
  detail::require(p.clique_min >= 2 && p.clique_max >= p.clique_min,
                  "random_block needs 2 <= clique_min <= clique_max");
  detail::require(p.n > 0 || p.cliques >= 1, "random_block needs cliques >= 1 or a target n");
  detail::require(p.n == 0 || p.n >= 2, "random_block target n must be >= 2");
  std::mt19937_64 rng(seed.value);
  std::vector<Edge> edges;
  int order = 0;
  auto draw = [&] { return detail::uniform_int(rng, p.clique_min, p.clique_max); };

  int first = draw();
  if (p.n > 0) first = std::min(first, p.n);
  edges.reserve(static_cast<std::size_t>(first * first));
  order = first;
  for (Vertex u = 0; u < first; ++u) {
    for (Vertex v = u + 1; v < first; ++v) edges.push_back({u, v});
  }
  for (int i = 1; p.n > 0 ? order < p.n : i < p.cliques; ++i) {
    int size = draw();
    if (p.n > 0) size = std::min(size, p.n - order + 1);
    const Vertex anchor = detail::uniform_int(rng, 0, order - 1);
    detail::add_clique_at(edges, order, anchor, size);
  }
  return Graph(order, edges);
}

/// A uniform-attachment spanning tree plus each remaining pair independently
/// with probability edge_probability.
inline Graph random_connected_graph(int n, double edge_probability, RandomSeed seed) {
  detail::require(n >= 1, "random_connected needs n >= 1");
  detail::require(edge_probability >= 0.0 && edge_probability <= 1.0,
                  "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed.value);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({detail::uniform_int(rng, 0, v - 1), v});
  std::bernoulli_distribution extra(edge_probability);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (extra(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

inline Graph generate(Family family, const GeneratorParams& p, RandomSeed seed = {}) {
  switch (family) {
    case Family::Path: return path_graph(p.n);
    case Family::Cycle: return cycle_graph(p.n);
    case Family::Complete: return complete_graph(p.n);
    case Family::Star: return star_graph(p.n);
    case Family::RandomTree: return random_tree(p.n, seed);
    case Family::RandomBlock: return random_block_graph(p, seed);
    case Family::RandomConnected: return random_connected_graph(p.n, p.edge_probability, seed);
  }
  throw Error(Errc::InvalidParams, "unknown family");
}

}  // namespace kmetric

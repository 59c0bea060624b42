#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

using Distance = std::uint32_t;

/// Unreachable marker; larger than any hop distance in a graph.
inline constexpr Distance kInfinite = std::numeric_limits<Distance>::max();

/// Full n x n hop-distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g)
      : n_(g.order()), table_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kInfinite) {
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n_));
    for (Vertex s = 0; s < n_; ++s) {
      Distance* row = &table_[index(s, 0)];
      row[s] = 0;
      queue.clear();
      queue.push_back(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
          if (row[w] != kInfinite) continue;
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
    connected_ = true;
    for (Distance d : table_) {
      if (d == kInfinite) {
        connected_ = false;
        break;
      }
      if (d > diameter_) diameter_ = d;
    }
    if (!connected_) diameter_ = 0;
  }

  int order() const noexcept { return n_; }

  Distance operator()(Vertex u, Vertex v) const { return table_[index(u, v)]; }

  std::span<const Distance> row(Vertex u) const {
    return {table_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }

  bool connected() const noexcept { return connected_ && n_ > 0; }

  /// Largest finite entry; meaningful only when connected().
  int diameter() const noexcept { return static_cast<int>(diameter_); }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Distance> table_;
  bool connected_ = false;
  Distance diameter_ = 0;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

namespace detail {

inline void require_connected(const DistanceMatrix& dm) {
  if (dm.order() == 0) throw Error(Errc::EmptyGraph, "graph has no vertices");
  if (!dm.connected()) throw Error(Errc::Disconnected, "graph is not connected");
}

inline void require_vertex(const DistanceMatrix& dm, Vertex v) {
  if (v < 0 || v >= dm.order()) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
}

}  // namespace detail

inline int diameter(const Graph& g) {
  const DistanceMatrix dm(g);
  detail::require_connected(dm);
  return dm.diameter();
}

}  // namespace kmetric

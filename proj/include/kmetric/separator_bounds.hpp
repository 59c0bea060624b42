#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <tuple>
#include <vector>

#include "kmetric/boundary_bounds.hpp"
#include "kmetric/dimension.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/geodesic_bounds.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// Evidence that the m-spheres of v and v' share a separating subset.
///
/// `separator` is S_m(v,v'), the union of all common separating subsets,
/// which always coincides with the full sphere intersection
/// S(v,m) n S(v',m) when any such subset exists: a far component of a smaller
/// subset must leave the intersection (its vertices cannot all sit at distance
/// m from v, since a v-geodesic into it enters one step closer), so the
/// intersection itself has a far component.
struct SeparatorCertificate {
  VertexPair pair;
  int radius = 0;
  VertexSet separator;
  std::vector<VertexSet> far_components;  // components of G \ separator avoiding both endpoints
  int mu = 0;                             // distinctive vertices outside the far components
};

struct MuReport {
  std::optional<int> mu;
  std::optional<SeparatorCertificate> witness;
  std::optional<SeparatorCertificate> critical;
};

/// One member (v, v') of P_m(G) with its mu_m value.
struct SeparatingEntry {
  int radius = 0;
  VertexPair pair;
  int mu = 0;
};

namespace detail {

class SeparatorScratch {
 public:
  explicit SeparatorScratch(int n)
      : mark_(static_cast<std::size_t>(n), 0), queue_() {
    queue_.reserve(static_cast<std::size_t>(n));
  }

  /// mu_m(v,w) when `separator` leaves a component avoiding v and w;
  /// nullopt otherwise. Separator vertices must lie at distance m from both.
  std::optional<int> evaluate(const Graph& g, const DistanceMatrix& dm, Vertex v, Vertex w,
                              const VertexSet& separator) {
    const int n = g.order();
    stamp_ += 2;
    if (stamp_ >= kStampLimit) reset();
    const int blocked = stamp_;
    const int reached = stamp_ + 1;
    for (Vertex s : separator) at(s) = blocked;
    queue_.clear();
    for (Vertex src : {v, w}) {
      if (at(src) != reached) {
        at(src) = reached;
        queue_.push_back(src);
      }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (Vertex x : g.neighbors(queue_[head])) {
        if (at(x) == blocked || at(x) == reached) continue;
        at(x) = reached;
        queue_.push_back(x);
      }
    }
    if (static_cast<int>(queue_.size() + separator.size()) == n) return std::nullopt;
    const auto rv = dm.row(v);
    const auto rw = dm.row(w);
    int count = 0;
    for (Vertex x : queue_) count += rv[static_cast<std::size_t>(x)] != rw[static_cast<std::size_t>(x)];
    return count;
  }

 private:
  static constexpr int kStampLimit = 1 << 30;

  int& at(Vertex v) { return mark_[static_cast<std::size_t>(v)]; }

  void reset() {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 2;
  }

  std::vector<int> mark_;
  std::vector<Vertex> queue_;
  int stamp_ = 0;
};

inline VertexSet sphere_intersection(const DistanceMatrix& dm, Vertex v, Vertex w, int m) {
  VertexSet out;
  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  const auto radius = static_cast<Distance>(m);
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if (rv[x] == radius && rw[x] == radius) out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

/// Equidistant vertices of (v, w) bucketed by their common distance; bucket m
/// is exactly S(v,m) n S(w,m).
inline std::vector<VertexSet> equidistant_buckets(const DistanceMatrix& dm, Vertex v, Vertex w) {
  std::vector<VertexSet> buckets(static_cast<std::size_t>(dm.diameter()) + 1);
  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if (rv[x] == rw[x]) buckets[rv[x]].push_back(static_cast<Vertex>(x));
  }
  return buckets;
}

inline void require_pair(const DistanceMatrix& dm, Vertex v, Vertex w) {
  require_vertex(dm, v);
  require_vertex(dm, w);
  if (v == w) throw Error(Errc::SamePair, "separator of (" + std::to_string(v) + "," + std::to_string(v) + ")");
}

}  // namespace detail

/// Common separating subset of the m-spheres of v and w, if one exists.
inline std::optional<SeparatorCertificate> common_separator(const Graph& g, const DistanceMatrix& dm, Vertex v,
                                                            Vertex w, int m) {
  detail::require_connected(dm);
  detail::require_pair(dm, v, w);
  detail::require_radius(dm, m, 1);
  auto separator = detail::sphere_intersection(dm, v, w, m);
  if (separator.empty()) return std::nullopt;

  const auto blocked = detail::vertex_mask(g, separator);
  int count = 0;
  const auto label = detail::label_components(g, blocked, [](Vertex, Vertex) { return true; }, &count);
  auto components = detail::group_labels(label, count);
  const int label_v = label[static_cast<std::size_t>(v)];
  const int label_w = label[static_cast<std::size_t>(w)];

  SeparatorCertificate cert{ordered(v, w), m, std::move(separator), {}, 0};
  std::vector<char> far(static_cast<std::size_t>(g.order()), 0);
  for (int c = 0; c < count; ++c) {
    if (c == label_v || c == label_w) continue;
    for (Vertex x : components[static_cast<std::size_t>(c)]) far[static_cast<std::size_t>(x)] = 1;
    cert.far_components.push_back(std::move(components[static_cast<std::size_t>(c)]));
  }
  if (cert.far_components.empty()) return std::nullopt;

  const auto rv = dm.row(v);
  const auto rw = dm.row(w);
  for (std::size_t x = 0; x < rv.size(); ++x) {
    if (!far[x] && rv[x] != rw[x]) ++cert.mu;
  }
  for (Vertex s : cert.separator) {
    assert(rv[static_cast<std::size_t>(s)] == rw[static_cast<std::size_t>(s)]);
    (void)s;
  }
  return cert;
}

/// Every (m, v, v') with a common separating subset, ordered by (pair, m).
inline std::vector<SeparatingEntry> separating_pairs(const Graph& g, const DistanceMatrix& dm,
                                                     std::optional<int> only_radius = std::nullopt) {
  detail::require_connected(dm);
  std::vector<SeparatingEntry> out;
  detail::SeparatorScratch scratch(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = v + 1; w < g.order(); ++w) {
      if (only_radius) {
        const auto sep = detail::sphere_intersection(dm, v, w, *only_radius);
        if (sep.empty()) continue;
        if (auto mu = scratch.evaluate(g, dm, v, w, sep)) out.push_back({*only_radius, {v, w}, *mu});
        continue;
      }
      const auto buckets = detail::equidistant_buckets(dm, v, w);
      for (std::size_t m = 1; m < buckets.size(); ++m) {
        if (buckets[m].empty()) continue;
        if (auto mu = scratch.evaluate(g, dm, v, w, buckets[m])) {
          out.push_back({static_cast<int>(m), {v, w}, *mu});
        }
      }
    }
  }
  return out;
}

namespace detail {

inline MuReport mu_from_entries(const Graph& g, const DistanceMatrix& dm, const std::vector<SeparatingEntry>& entries) {
  MuReport out;
  const SeparatingEntry* best = nullptr;
  auto key = [](const SeparatingEntry& e) { return std::tie(e.mu, e.radius, e.pair); };
  for (const auto& e : entries) {
    if (!best || key(e) < key(*best)) best = &e;
  }
  if (!best) return out;
  out.mu = best->mu;
  out.witness = common_separator(g, dm, best->pair.first, best->pair.second, best->radius);
  // The minimal (mu, m, pair) entry also has the smallest radius for its own
  // pair among radii attaining mu(G), so it is critical.
  out.critical = out.witness;
  return out;
}

}  // namespace detail

/// mu(G): minimum of mu_m(v,v') over m = 1..diam and all separating pairs.
/// Witness and critical certificate minimize (mu, m, pair).
inline MuReport mu_bound(const Graph& g, const DistanceMatrix& dm) {
  return detail::mu_from_entries(g, dm, separating_pairs(g, dm));
}

/// mu_1(G): the same sweep restricted to radius one.
inline MuReport mu_radius_one(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  if (dm.diameter() < 1) return {};
  return detail::mu_from_entries(g, dm, separating_pairs(g, dm, 1));
}

/// For every pair attaining mu(G) at some radius, the certificate at the
/// smallest such radius.
inline std::vector<SeparatorCertificate> critical_separators(const Graph& g, const DistanceMatrix& dm,
                                                             const std::vector<SeparatingEntry>& entries,
                                                             int mu) {
  std::vector<SeparatorCertificate> out;
  std::optional<VertexPair> last;
  for (const auto& e : entries) {  // ordered by (pair, m)
    if (e.mu != mu || (last && *last == e.pair)) continue;
    last = e.pair;
    out.push_back(*common_separator(g, dm, e.pair.first, e.pair.second, e.radius));
  }
  return out;
}

struct RelationFlag {
  bool premise = false;
  bool conclusion = false;

  bool holds() const { return !premise || conclusion; }
};

struct BoundRelations {
  RelationFlag eta_dominates_mu;  // eta realized by a pair whose balls miss a vertex => eta >= mu
  RelationFlag mu_below_sigma;    // exterior majors exist => P(G) non-empty and mu <= sigma
  RelationFlag dim_below_mu;      // P(G) non-empty => Dim <= mu
};

inline BoundRelations check_bound_relations(const Graph& g, const DistanceMatrix& dm, const DimensionReport& dim,
                                            const EtaReport& eta, const LandmarkStructure& landmarks,
                                            const MuReport& mu) {
  (void)g;
  BoundRelations out;
  if (eta.eta) {
    for (const auto& [m, pairs] : eta.equal_boundary_pairs) {
      for (const auto& p : pairs) {
        if (eta_value(dm, p.first, p.second, m) == *eta.eta && !balls_cover_graph(dm, p.first, p.second, m)) {
          out.eta_dominates_mu.premise = true;
          break;
        }
      }
      if (out.eta_dominates_mu.premise) break;
    }
    out.eta_dominates_mu.conclusion = mu.mu && *eta.eta >= *mu.mu;
  }
  out.mu_below_sigma.premise = landmarks.sigma.has_value();
  out.mu_below_sigma.conclusion = mu.mu && landmarks.sigma && *mu.mu <= *landmarks.sigma;
  out.dim_below_mu.premise = mu.mu.has_value();
  out.dim_below_mu.conclusion = mu.mu && dim.k <= *mu.mu;
  return out;
}

}  // namespace kmetric

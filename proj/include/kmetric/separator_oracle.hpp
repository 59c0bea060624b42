#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kmetric/distance.hpp"
#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

inline constexpr int kSubsetOracleLimit = 20;

/// Brute force: every non-empty S inside S(v,m) n S(v',m) such that G \ S is
/// disconnected and has a component containing neither v nor v'. Subsets are
/// listed in increasing bitmask order over the sorted sphere intersection.
inline std::vector<VertexSet> subset_oracle_separators(const Graph& g, const DistanceMatrix& dm, Vertex v, Vertex w,
                                                       int m) {
  detail::require_connected(dm);
  detail::require_vertex(dm, v);
  detail::require_vertex(dm, w);
  if (v == w) throw Error(Errc::SamePair, "oracle needs two distinct vertices");
  if (m < 1 || m > dm.diameter()) throw Error(Errc::RadiusOutOfRange, "radius " + std::to_string(m));

  VertexSet candidates;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (dm(v, x) == static_cast<Distance>(m) && dm(w, x) == static_cast<Distance>(m)) candidates.push_back(x);
  }
  if (candidates.size() > static_cast<std::size_t>(kSubsetOracleLimit)) {
    throw Error(Errc::TooLarge, std::to_string(candidates.size()) + " candidate vertices");
  }

  std::vector<VertexSet> out;
  const std::uint32_t limit = std::uint32_t{1} << candidates.size();
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    VertexSet subset;
    std::fill(blocked.begin(), blocked.end(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        subset.push_back(candidates[i]);
        blocked[static_cast<std::size_t>(candidates[i])] = 1;
      }
    }
    int count = 0;
    const auto label = detail::label_components(g, blocked, [](Vertex, Vertex) { return true; }, &count);
    if (count < 2) continue;
    bool avoiding = false;
    for (int c = 0; c < count && !avoiding; ++c) {
      avoiding = c != label[static_cast<std::size_t>(v)] && c != label[static_cast<std::size_t>(w)];
    }
    if (avoiding) out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace kmetric

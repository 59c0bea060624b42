#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "kmetric/blocks.hpp"
#include "kmetric/dimension.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/error.hpp"
#include "kmetric/geodesic_bounds.hpp"
#include "kmetric/graph.hpp"
#include "kmetric/separator_bounds.hpp"

namespace kmetric {

struct TaggedWitness {
  std::size_t block = 0;  // index into BlockDecomposition::blocks
  Vertex u = 0;
  Vertex v = 0;
};

struct BlockGraphReport {
  int order = 0;
  bool is_block_graph = false;
  VertexSet extreme_vertices;  // closed neighborhood induces a clique
  bool is_v_graph = false;
  bool is_tagged = false;
  std::optional<TaggedWitness> tagged_witness;
  bool is_complete = false;
  bool is_path = false;
  bool is_elementary = false;
};

/// A 3-cut vertex (cut vertex of degree >= 3) or a 3-cut block (block with at
/// least three vertices).
struct ThreeCutPiece {
  enum class Kind { CutVertex, CutBlock };
  Kind kind = Kind::CutVertex;
  VertexSet vertices;  // {w} for a cut vertex, the block otherwise
  std::size_t block = 0;  // block index; meaningful for CutBlock only
};

/// A member of E(G): a radius-one separating pair around one piece whose
/// detached sides hold no further piece.
struct ExtremalPair {
  VertexPair pair;
  std::size_t piece = 0;  // index into ThreeCutStructure::pieces
  VertexSet side_first;   // component holding pair.first
  VertexSet side_second;  // component holding pair.second
};

struct ThreeCutStructure {
  VertexSet cut_vertices3;
  std::vector<VertexSet> cut_blocks3;
  std::vector<ThreeCutPiece> pieces;  // cut vertices first, then blocks
  std::vector<std::size_t> extremal_pieces;
  std::vector<ExtremalPair> extremal_pairs;  // sorted by pair, one entry per pair
};

inline bool is_block_graph(const Graph& g, const BlockDecomposition& decomposition) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
  return std::all_of(decomposition.blocks.begin(), decomposition.blocks.end(),
                     [&g](const VertexSet& b) { return induces_clique(g, b); });
}

inline bool is_block_graph(const Graph& g) { return is_block_graph(g, block_decomposition(g)); }

namespace detail {

inline bool complete_graph_shape(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool path_graph_shape(const Graph& g) {
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.order())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

}  // namespace detail

/// Classification flags of a connected block graph.
///
/// The V-graph test asks for a major vertex with two terminal vertices both
/// adjacent to it. Tagging is evaluated for non-elementary graphs only: a
/// maximal clique K_r, r >= 3, holding two vertices of degree r - 1.
inline BlockGraphReport classify(const Graph& g, const DistanceMatrix& dm, const BlockDecomposition& decomposition) {
  detail::require_connected(dm);
  if (!is_block_graph(g, decomposition)) throw Error(Errc::NotBlockGraph, "some block is not a clique");
  BlockGraphReport out;
  out.order = g.order();
  out.is_block_graph = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    if (induces_clique(g, closed)) out.extreme_vertices.push_back(v);
  }
  out.is_complete = detail::complete_graph_shape(g);
  out.is_path = detail::path_graph_shape(g);
  out.is_elementary = out.is_complete || out.is_path;
  if (g.order() < 2) return out;

  const auto landmarks = landmark_structure(g, dm);
  for (const auto& [w, terminals] : landmarks.terminal_map) {
    const auto adjacent = std::count_if(terminals.begin(), terminals.end(), [&](Vertex u) { return dm(u, w) == 1; });
    if (adjacent >= 2) {
      out.is_v_graph = true;
      break;
    }
  }

  if (out.is_elementary) return out;
  for (std::size_t i = 0; i < decomposition.blocks.size() && !out.is_tagged; ++i) {
    const auto& block = decomposition.blocks[i];
    const int r = static_cast<int>(block.size());
    if (r < 3) continue;
    std::optional<Vertex> first;
    for (Vertex x : block) {
      if (g.degree(x) != r - 1) continue;
      if (!first) {
        first = x;
        continue;
      }
      out.is_tagged = true;
      out.tagged_witness = TaggedWitness{i, *first, x};
      break;
    }
  }
  return out;
}

/// Dim(G) == 2 for a block graph. Elementary graphs use the closed forms
/// (complete: always two; path P_n: n - 1).
inline bool is_two_dimensional(const BlockGraphReport& report) {
  if (report.is_complete) return report.order >= 2;
  if (report.is_path) return report.order == 3;
  return report.is_v_graph || report.is_tagged;
}

/// Whether two extreme vertices share a neighboring cut vertex. Being
/// 2-metric dimensional does not follow from it; this is kept to document
/// that gap.
inline bool extreme_vertices_share_cut_neighbor(const Graph& g, const BlockDecomposition& decomposition,
                                                const BlockGraphReport& report) {
  for (Vertex c : decomposition.cut_vertices) {
    int count = 0;
    for (Vertex x : g.neighbors(c)) count += set_contains(report.extreme_vertices, x);
    if (count >= 2) return true;
  }
  return false;
}

namespace detail {

class PieceIndex {
 public:
  explicit PieceIndex(const ThreeCutStructure& s, int n) : is_cut3_(static_cast<std::size_t>(n), 0), s_(s) {
    for (Vertex w : s.cut_vertices3) is_cut3_[static_cast<std::size_t>(w)] = 1;
  }

  /// True when some piece lies entirely inside `in_set` (a vertex mask).
  bool contains_piece(const std::vector<char>& in_set) const {
    for (std::size_t v = 0; v < in_set.size(); ++v) {
      if (in_set[v] && is_cut3_[v]) return true;
    }
    for (const auto& block : s_.cut_blocks3) {
      if (std::all_of(block.begin(), block.end(), [&](Vertex x) { return in_set[static_cast<std::size_t>(x)] != 0; })) {
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<char> is_cut3_;
  const ThreeCutStructure& s_;
};

inline std::vector<char> label_mask(const std::vector<int>& label, int which) {
  std::vector<char> mask(label.size(), 0);
  for (std::size_t v = 0; v < label.size(); ++v) mask[v] = label[v] == which;
  return mask;
}

inline VertexSet mask_members(const std::vector<char>& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace detail

/// 3-cut pieces and E(G).
///
/// Around a 3-cut vertex w, the pair (v, v') qualifies when S_1(v,v') = {w}
/// and the components of G \ {w} holding v and v' contain no piece. Around a
/// 3-cut block K, (v, v') in K qualifies when S_1(v,v') lies in K and the
/// components of G \ E(K) holding v and v', minus the vertices of K, contain
/// no piece. A piece is contained in a vertex set when all of its vertices
/// are.
inline ThreeCutStructure three_cut_structure(const Graph& g, const DistanceMatrix& dm,
                                             const BlockDecomposition& decomposition) {
  detail::require_connected(dm);
  if (!is_block_graph(g, decomposition)) throw Error(Errc::NotBlockGraph, "some block is not a clique");
  if (detail::complete_graph_shape(g) || detail::path_graph_shape(g)) {
    throw Error(Errc::Elementary, "complete graphs and paths have no 3-cut pieces");
  }
  const int n = g.order();
  ThreeCutStructure out;
  for (Vertex w : decomposition.cut_vertices) {
    if (g.degree(w) >= 3) {
      out.cut_vertices3.push_back(w);
      out.pieces.push_back({ThreeCutPiece::Kind::CutVertex, {w}, 0});
    }
  }
  for (std::size_t i = 0; i < decomposition.blocks.size(); ++i) {
    if (decomposition.blocks[i].size() >= 3) {
      out.cut_blocks3.push_back(decomposition.blocks[i]);
      out.pieces.push_back({ThreeCutPiece::Kind::CutBlock, decomposition.blocks[i], i});
    }
  }

  const detail::PieceIndex index(out, n);
  std::vector<std::tuple<VertexPair, std::size_t, VertexSet, VertexSet>> found;
  std::vector<char> extremal(out.pieces.size(), 0);
  const std::vector<char> none(static_cast<std::size_t>(n), 0);

  for (std::size_t p = 0; p < out.pieces.size(); ++p) {
    const auto& piece = out.pieces[p];
    int count = 0;
    std::vector<int> label;
    if (piece.kind == ThreeCutPiece::Kind::CutVertex) {
      label = detail::label_components(g, detail::vertex_mask(g, piece.vertices), [](Vertex, Vertex) { return true; },
                                       &count);
    } else {
      const auto& block = piece.vertices;
      label = detail::label_components(
          g, none, [&block](Vertex a, Vertex b) { return !(set_contains(block, a) && set_contains(block, b)); },
          &count);
    }
    const auto in_piece = detail::vertex_mask(g, piece.vertices);

    VertexSet candidates;
    if (piece.kind == ThreeCutPiece::Kind::CutVertex) {
      candidates.assign(g.neighbors(piece.vertices[0]).begin(), g.neighbors(piece.vertices[0]).end());
    } else {
      candidates = piece.vertices;
    }

    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        const Vertex v = candidates[a];
        const Vertex w = candidates[b];
        const auto cert = common_separator(g, dm, v, w, 1);
        if (!cert) continue;
        if (piece.kind == ThreeCutPiece::Kind::CutVertex) {
          if (cert->separator != piece.vertices) continue;
        } else if (!std::includes(piece.vertices.begin(), piece.vertices.end(), cert->separator.begin(),
                                  cert->separator.end())) {
          continue;
        }
        auto side_v = detail::label_mask(label, label[static_cast<std::size_t>(v)]);
        auto side_w = detail::label_mask(label, label[static_cast<std::size_t>(w)]);
        auto check_v = side_v;
        auto check_w = side_w;
        if (piece.kind == ThreeCutPiece::Kind::CutBlock) {
          for (std::size_t x = 0; x < in_piece.size(); ++x) {
            if (in_piece[x]) check_v[x] = check_w[x] = 0;
          }
        }
        if (index.contains_piece(check_v) || index.contains_piece(check_w)) continue;
        extremal[p] = 1;
        found.emplace_back(VertexPair{v, w}, p, detail::mask_members(side_v), detail::mask_members(side_w));
      }
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
  for (auto& [pair, piece, first, second] : found) {
    if (!out.extremal_pairs.empty() && out.extremal_pairs.back().pair == pair) continue;
    out.extremal_pairs.push_back({pair, piece, std::move(first), std::move(second)});
  }
  for (std::size_t p = 0; p < extremal.size(); ++p) {
    if (extremal[p]) out.extremal_pieces.push_back(p);
  }
  return out;
}

/// mu(G) as the minimum of mu_1 over E(G) only.
inline MuReport fast_mu(const Graph& g, const DistanceMatrix& dm, const ThreeCutStructure& structure) {
  if (structure.extremal_pairs.empty()) throw Error(Errc::EmptyE, "no extremal pair found");
  MuReport out;
  for (const auto& e : structure.extremal_pairs) {
    auto cert = common_separator(g, dm, e.pair.first, e.pair.second, 1);
    if (!cert) throw Error(Errc::EmptyE, "extremal pair without radius-one separator");
    if (!out.mu || cert->mu < *out.mu) {
      out.mu = cert->mu;
      out.witness = std::move(cert);
    }
  }
  out.critical = out.witness;
  return out;
}

/// Dim(G) for a connected block graph: closed forms for complete graphs and
/// paths, otherwise the extremal-pair minimum of mu_1.
inline DimensionReport block_dimension(const Graph& g, const DistanceMatrix& dm) {
  detail::require_connected(dm);
  if (g.order() < 2) throw Error(Errc::TooSmall, "dimensionality needs at least two vertices");
  const auto decomposition = block_decomposition(g);
  if (!is_block_graph(g, decomposition)) throw Error(Errc::NotBlockGraph, "some block is not a clique");

  VertexPair pair{0, 1};
  if (detail::complete_graph_shape(g)) {
    return {2, pair, distinctive_set(g, dm, 0, 1)};
  }
  if (detail::path_graph_shape(g)) {
    // Both neighbors of an inner vertex are separated by everything else.
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) {
        pair = ordered(g.neighbors(v)[0], g.neighbors(v)[1]);
        break;
      }
    }
    return {g.order() - 1, pair, distinctive_set(g, dm, pair.first, pair.second)};
  }
  const auto mu = fast_mu(g, dm, three_cut_structure(g, dm, decomposition));
  pair = mu.witness->pair;
  return {*mu.mu, pair, distinctive_set(g, dm, pair.first, pair.second)};
}

}  // namespace kmetric

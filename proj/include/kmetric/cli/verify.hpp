#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "kmetric/blockgraph.hpp"
#include "kmetric/blocks.hpp"
#include "kmetric/boundary_bounds.hpp"
#include "kmetric/dimension.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/edge_list.hpp"
#include "kmetric/geodesic_bounds.hpp"
#include "kmetric/oracles.hpp"
#include "kmetric/separator_bounds.hpp"
#include "kmetric/separator_oracle.hpp"

namespace kmetric::cli {

/// Result of one check on one graph. When the premise held but the conclusion
/// did not, `counterexample` carries the graph as an edge list.
struct CheckResult {
  std::string id;
  bool premise_held = false;
  bool conclusion_held = true;
  std::optional<std::string> counterexample;

  bool violated() const { return premise_held && !conclusion_held; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.violated(); });
  }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

inline constexpr int kOracleMaxCeiling = 12;

struct VerifyOptions {
  // Exponential oracles (subset enumeration, geodesic enumeration) run only
  // on graphs with at most this many vertices.
  int oracle_max = 10;
};

namespace detail {

class CheckRecorder {
 public:
  CheckRecorder(const Graph& g, VerifyReport& report) : g_(g), report_(report) {}

  void record(std::string id, bool premise, const std::function<bool()>& conclusion) {
    CheckResult r{std::move(id), premise, true, std::nullopt};
    if (premise) {
      r.conclusion_held = conclusion();
      if (!r.conclusion_held) r.counterexample = to_edge_list(g_);
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  const Graph& g_;
  VerifyReport& report_;
};

inline bool same_distances(const DistanceMatrix& dm, const oracle::DistanceTable& table) {
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = 0; v < dm.order(); ++v) {
      if (static_cast<int>(dm(u, v)) != table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

/// Consecutive vertices on geodesics are forced: two different neighbors of u
/// can never both be one step closer to v.
inline bool unique_geodesics(const Graph& g, const DistanceMatrix& dm) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      int closer = 0;
      for (Vertex p : g.neighbors(u)) closer += dm(p, v) + 1 == dm(u, v);
      if (closer > 1) return false;
    }
  }
  return true;
}

inline bool separating_set_has_far_component(const Graph& g, const VertexSet& separator, Vertex v, Vertex w) {
  int count = 0;
  const auto label =
      kmetric::detail::label_components(g, kmetric::detail::vertex_mask(g, separator), [](Vertex, Vertex) { return true; }, &count);
  for (int c = 0; c < count; ++c) {
    if (c != label[static_cast<std::size_t>(v)] && c != label[static_cast<std::size_t>(w)]) return true;
  }
  return false;
}

}  // namespace detail

inline VerifyReport verify_graph(const Graph& g, const VerifyOptions& options = {}) {
  if (options.oracle_max > kOracleMaxCeiling) {
    throw Error(Errc::OracleTooLarge, "oracle-max " + std::to_string(options.oracle_max) + " exceeds " +
                                          std::to_string(kOracleMaxCeiling));
  }
  const DistanceMatrix dm(g);
  kmetric::detail::require_connected(dm);
  if (g.order() < 2) throw Error(Errc::TooSmall, "verification needs at least two vertices");

  VerifyReport report;
  detail::CheckRecorder check(g, report);
  const int n = g.order();
  const bool small = n <= options.oracle_max;

  const auto dim = metric_dimensionality(g, dm);
  const auto geodesic = shortest_maximal_geodesic(g, dm);
  const auto landmarks = landmark_structure(g, dm);
  const auto eta = eta_bound(g, dm);
  const auto entries = separating_pairs(g, dm);
  const auto mu = kmetric::detail::mu_from_entries(g, dm, entries);
  const int diam_bound = diameter_lower_bound(dm);

  check.record("distance_oracle", true, [&] { return detail::same_distances(dm, oracle::floyd_warshall(g)); });
  check.record("dimension_oracle", true, [&] {
    const VertexSet all = [&] {
      VertexSet v(static_cast<std::size_t>(n));
      for (Vertex x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] = x;
      return v;
    }();
    return dim.k == oracle::naive_dimension(g) && dim.k >= 2 && is_k_metric_generator(g, dm, all, dim.k) &&
           !is_k_metric_generator(g, dm, all, dim.k + 1);
  });

  check.record("geodesic_lower_bound", true, [&] { return geodesic.length <= dim.k; });
  check.record("geodesic_oracle", small, [&] {
    if (oracle::shortest_maximal_geodesic_length(g) != geodesic.length) return false;
    const auto [u, v] = geodesic.witness_endpoints;
    const auto maximal = oracle::maximal_geodesics(g);
    for (const auto& p : oracle::all_geodesics(g)) {
      if (p.front() != u || p.back() != v) continue;
      if (std::find(maximal.begin(), maximal.end(), p) == maximal.end()) return false;
    }
    return true;
  });

  check.record("sigma_upper_bound", landmarks.sigma.has_value(), [&] { return sigma_upper_bound_holds(landmarks, dim); });
  {
    bool premise = false;
    for (Vertex w : landmarks.exterior_majors) {
      const auto& t = landmarks.terminal_map.at(w);
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          premise = premise || static_cast<int>(dm(t[i], w) + dm(w, t[j])) == geodesic.length;
        }
      }
    }
    check.record("geodesic_sigma_equality", premise,
                 [&] { return geodesic.length == dim.k && landmarks.sigma && *landmarks.sigma == dim.k; });
  }

  check.record("diameter_lower_bound", !eta.any_equal_boundary(), [&] { return dim.k >= diam_bound; });
  check.record("eta_upper_bound", eta.eta.has_value(), [&] { return dim.k <= *eta.eta; });
  check.record("eta_equality", eta.eta && *eta.eta <= diam_bound, [&] { return dim.k == *eta.eta; });
  check.record("mu_upper_bound", mu.mu.has_value(), [&] { return dim.k <= *mu.mu; });

  const auto relations = check_bound_relations(g, dm, dim, eta, landmarks, mu);
  check.record("eta_dominates_mu", relations.eta_dominates_mu.premise,
               [&] { return relations.eta_dominates_mu.conclusion; });
  check.record("mu_below_sigma", relations.mu_below_sigma.premise, [&] { return relations.mu_below_sigma.conclusion; });

  check.record("boundary_equidistance", eta.any_equal_boundary(), [&] {
    for (const auto& [m, pairs] : eta.equal_boundary_pairs) {
      for (const auto& p : pairs) {
        if (!boundary_equidistance_holds(g, dm, p.first, p.second, m)) return false;
        if (eta_value(dm, p.first, p.second, m) < 2) return false;
      }
    }
    return true;
  });

  check.record("boundary_separates", eta.any_equal_boundary(), [&] {
    std::set<std::tuple<int, Vertex, Vertex>> members;
    for (const auto& e : entries) members.emplace(e.radius, e.pair.first, e.pair.second);
    for (const auto& [m, pairs] : eta.equal_boundary_pairs) {
      for (const auto& p : pairs) {
        if (balls_cover_graph(dm, p.first, p.second, m)) continue;
        const auto boundary = boundary_profile(g, dm, p.first, m).boundary;
        if (!detail::separating_set_has_far_component(g, boundary, p.first, p.second)) return false;
        if (!members.count({m, p.first, p.second})) return false;
      }
    }
    return true;
  });

  check.record("separator_equidistance", !entries.empty(), [&] {
    for (const auto& e : entries) {
      const auto cert = common_separator(g, dm, e.pair.first, e.pair.second, e.radius);
      if (!cert || cert->mu != e.mu || cert->mu < 2) return false;
      for (const auto& comp : cert->far_components) {
        for (Vertex x : comp) {
          if (dm(e.pair.first, x) != dm(e.pair.second, x)) return false;
        }
      }
      if (distinctive_count(dm, e.pair.first, e.pair.second) != cert->mu) return false;
    }
    return true;
  });

  check.record("separator_union", small, [&] {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        for (int m = 1; m <= dm.diameter(); ++m) {
          const auto subsets = subset_oracle_separators(g, dm, v, w, m);
          const auto cert = common_separator(g, dm, v, w, m);
          if (subsets.empty() != !cert.has_value()) return false;
          if (!cert) continue;
          VertexSet united;
          for (const auto& s : subsets) united.insert(united.end(), s.begin(), s.end());
          std::sort(united.begin(), united.end());
          united.erase(std::unique(united.begin(), united.end()), united.end());
          if (united != cert->separator) return false;
        }
      }
    }
    return true;
  });

  const auto decomposition = block_decomposition(g);
  check.record("cut_vertex_separates", !decomposition.cut_vertices.empty(), [&] {
    for (Vertex c : decomposition.cut_vertices) {
      int count = 0;
      const auto label = kmetric::detail::label_components(g, kmetric::detail::vertex_mask(g, VertexSet{c}),
                                                  [](Vertex, Vertex) { return true; }, &count);
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
          if (v == c || w == c || dm(v, c) != dm(w, c)) continue;
          bool avoiding = false;
          for (int k = 0; k < count && !avoiding; ++k) {
            avoiding = k != label[static_cast<std::size_t>(v)] && k != label[static_cast<std::size_t>(w)];
          }
          if (avoiding && !common_separator(g, dm, v, w, static_cast<int>(dm(v, c)))) return false;
        }
      }
    }
    return true;
  });

  // Block-graph results.
  const bool block = is_block_graph(g, decomposition);
  std::optional<BlockGraphReport> kind;
  if (block) kind = classify(g, dm, decomposition);
  const bool non_elementary = block && !kind->is_elementary;

  check.record("unique_geodesics", block, [&] { return detail::unique_geodesics(g, dm); });
  check.record("non_elementary_separators", block, [&] { return entries.empty() == kind->is_elementary; });
  check.record("elementary_closed_form", block && kind->is_elementary, [&] {
    const int expected = kind->is_complete ? 2 : n - 1;
    return dim.k == expected && block_dimension(g, dm).k == expected;
  });
  check.record("two_dimensional_characterization", block, [&] { return is_two_dimensional(*kind) == (dim.k == 2); });
  check.record("tagged_mu_two", non_elementary && kind->is_tagged, [&] { return mu.mu && *mu.mu == 2; });
  check.record("non_tagged_dichotomy", non_elementary && !kind->is_tagged, [&] {
    std::set<VertexPair> separating;
    for (const auto& e : entries) separating.insert(e.pair);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        if (!separating.count({v, w}) && distinctive_count(dm, v, w) < n - 1) return false;
      }
    }
    return true;
  });
  check.record("mu_radius_one", non_elementary, [&] {
    const auto mu1 = mu_radius_one(g, dm);
    return mu.mu && mu1.mu && *mu.mu == *mu1.mu;
  });
  check.record("block_dimension_equals_mu", non_elementary,
               [&] { return mu.mu && *mu.mu == dim.k && block_dimension(g, dm).k == dim.k; });
  check.record("fast_mu_extremal", non_elementary, [&] {
    const auto fast = fast_mu(g, dm, three_cut_structure(g, dm, decomposition));
    return mu.mu && fast.mu && *fast.mu == *mu.mu;
  });

  const auto criticals = block && mu.mu ? critical_separators(g, dm, entries, *mu.mu) : std::vector<SeparatorCertificate>{};
  check.record("critical_separator_clique", block && mu.mu.has_value(), [&] {
    return std::all_of(criticals.begin(), criticals.end(),
                       [&](const SeparatorCertificate& c) { return induces_clique(g, c.separator); });
  });
  {
    bool premise = false;
    bool conclusion = true;
    for (const auto& c : criticals) {
      if (c.separator.size() < 2) continue;
      // A clique of size >= 2 lies in exactly one block.
      const VertexSet* enclosing = nullptr;
      for (const auto& b : decomposition.blocks) {
        if (std::includes(b.begin(), b.end(), c.separator.begin(), c.separator.end())) enclosing = &b;
      }
      if (!enclosing || set_contains(*enclosing, c.pair.first) || set_contains(*enclosing, c.pair.second)) continue;
      premise = true;
      const auto parts = components_after_vertex_removal(g, *enclosing);
      bool apart = true;
      for (const auto& part : parts) {
        if (set_contains(part, c.pair.first) && set_contains(part, c.pair.second)) apart = false;
      }
      conclusion = conclusion && apart && enclosing->size() == c.separator.size() + 2;
    }
    check.record("critical_separator_size", premise, [&] { return conclusion; });
  }

  const bool tree = g.edge_count() + 1 == static_cast<std::size_t>(n);
  const bool path = tree && std::all_of(decomposition.blocks.begin(), decomposition.blocks.end(), [](auto&) { return true; }) &&
                    [&] {
                      for (Vertex v = 0; v < n; ++v) {
                        if (g.degree(v) > 2) return false;
                      }
                      return true;
                    }();
  check.record("tree_dimension_sigma", tree && !path,
               [&] { return landmarks.sigma && *landmarks.sigma == dim.k; });
  check.record("tree_extremal_pieces", tree && !path, [&] {
    const auto s = three_cut_structure(g, dm, decomposition);
    VertexSet extremal;
    for (std::size_t p : s.extremal_pieces) extremal.push_back(s.pieces[p].vertices[0]);
    std::sort(extremal.begin(), extremal.end());
    return extremal == landmarks.exterior_majors;
  });
  return report;
}

/// Per-check totals over a corpus of graphs.
struct CheckSummary {
  std::string id;
  int graphs = 0;
  int premise_held = 0;
  int violations = 0;
  std::optional<std::string> counterexample;
};

struct CorpusReport {
  int graphs = 0;
  std::vector<CheckSummary> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.violations == 0; });
  }

  void add(const VerifyReport& report) {
    ++graphs;
    for (const auto& r : report.checks) {
      auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckSummary& s) { return s.id == r.id; });
      if (it == checks.end()) {
        checks.push_back({r.id, 0, 0, 0, std::nullopt});
        it = std::prev(checks.end());
      }
      ++it->graphs;
      it->premise_held += r.premise_held;
      if (r.violated()) {
        ++it->violations;
        if (!it->counterexample) it->counterexample = r.counterexample;
      }
    }
  }
};

inline nlohmann::ordered_json to_json(const CorpusReport& report) {
  nlohmann::ordered_json j;
  j["graphs"] = report.graphs;
  j["ok"] = report.ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["graphs"] = c.graphs;
    row["premise_held"] = c.premise_held;
    row["violations"] = c.violations;
    row["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nlohmann::ordered_json(nullptr);
    j["checks"].push_back(std::move(row));
  }
  return j;
}

}  // namespace kmetric::cli

#pragma once

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kmetric/blockgraph.hpp"
#include "kmetric/boundary_bounds.hpp"
#include "kmetric/dimension.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/geodesic_bounds.hpp"
#include "kmetric/separator_bounds.hpp"

namespace kmetric::cli {

struct Classification {
  bool elementary = false;
  bool tagged = false;
  bool v_graph = false;
};

/// One graph's invariants. Bounds that do not exist for the graph (or were
/// skipped in fast mode) are empty and serialize as JSON null.
struct AnalysisReport {
  int n = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  int dim = 0;
  VertexPair witness_pair;
  int A = 0;
  std::optional<int> sigma;
  std::optional<int> eta;
  std::optional<int> mu;
  int diam = 0;
  int diam_lower_bound = 0;
  bool block_graph = false;
  std::optional<Classification> classification;  // block graphs only
  std::map<std::string, double> timing;           // milliseconds per invariant
  bool fast = false;
};

struct AnalysisOptions {
  // Skip the eta and full mu sweeps; on block graphs use the extremal-pair
  // algorithm for Dim and mu.
  bool fast = false;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {}) {
  AnalysisReport r;
  r.n = g.order();
  r.edge_count = g.edge_count();
  r.fast = options.fast;
  detail::Stopwatch clock;
  const DistanceMatrix dm(g);
  r.timing["distances"] = clock.lap();
  r.connected = dm.connected();
  if (!r.connected) throw Error(Errc::Disconnected, "graph is not connected");
  if (r.n < 2) throw Error(Errc::TooSmall, "analysis needs at least two vertices");

  r.diam = dm.diameter();
  r.diam_lower_bound = diameter_lower_bound(dm);

  const auto decomposition = block_decomposition(g);
  r.block_graph = is_block_graph(g, decomposition);
  std::optional<BlockGraphReport> block_report;
  if (r.block_graph) {
    block_report = classify(g, dm, decomposition);
    r.classification = Classification{block_report->is_elementary, block_report->is_tagged, block_report->is_v_graph};
  }
  r.timing["blockgraph"] = clock.lap();

  if (options.fast && r.block_graph) {
    const auto dim = block_dimension(g, dm);
    r.dim = dim.k;
    r.witness_pair = dim.witness_pair;
  } else {
    const auto dim = metric_dimensionality(g, dm);
    r.dim = dim.k;
    r.witness_pair = dim.witness_pair;
  }
  r.timing["dim"] = clock.lap();

  r.A = shortest_maximal_geodesic(g, dm).length;
  r.timing["A"] = clock.lap();

  r.sigma = landmark_structure(g, dm).sigma;
  r.timing["sigma"] = clock.lap();

  if (!options.fast) {
    r.eta = eta_bound(g, dm).eta;
    r.timing["eta"] = clock.lap();
    r.mu = mu_bound(g, dm).mu;
    r.timing["mu"] = clock.lap();
  } else if (block_report && !block_report->is_elementary) {
    r.mu = fast_mu(g, dm, three_cut_structure(g, dm, decomposition)).mu;
    r.timing["mu"] = clock.lap();
  }
  return r;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& r, bool with_timing = false) {
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["connected"] = r.connected;
  j["dim"] = r.dim;
  j["witness_pair"] = {r.witness_pair.first, r.witness_pair.second};
  j["A"] = r.A;
  j["sigma"] = opt(r.sigma);
  j["eta"] = opt(r.eta);
  j["mu"] = opt(r.mu);
  j["diam"] = r.diam;
  j["diam_lower_bound"] = r.diam_lower_bound;
  j["block_graph"] = r.block_graph;
  if (r.classification) {
    j["classification"] = {{"elementary", r.classification->elementary},
                           {"tagged", r.classification->tagged},
                           {"v_graph", r.classification->v_graph}};
  } else {
    j["classification"] = nullptr;
  }
  if (with_timing) {
    j["timing"] = r.timing;
  } else {
    j["timing"] = nullptr;
  }
  j["mode"] = r.fast ? "fast" : "full";
  return j;
}

inline std::string render_text(const AnalysisReport& r, bool with_timing = false) {
  std::ostringstream out;
  auto row = [&out](const std::string& key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << '\n';
  };
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  auto flag = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("vertices", std::to_string(r.n));
  row("edges", std::to_string(r.edge_count));
  row("connected", flag(r.connected));
  row("dim", std::to_string(r.dim) + "  (pair " + std::to_string(r.witness_pair.first) + ", " +
                 std::to_string(r.witness_pair.second) + ")");
  row("A", std::to_string(r.A));
  row("sigma", opt(r.sigma));
  row("eta", r.fast ? "skipped" : opt(r.eta));
  row("mu", opt(r.mu));
  row("diam", std::to_string(r.diam));
  row("diam_lower_bound", std::to_string(r.diam_lower_bound));
  row("block_graph", flag(r.block_graph));
  if (r.classification) {
    row("elementary", flag(r.classification->elementary));
    row("tagged", flag(r.classification->tagged));
    row("v_graph", flag(r.classification->v_graph));
  }
  if (with_timing) {
    for (const auto& [name, ms] : r.timing) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << ms << " ms";
      row("time." + name, t.str());
    }
  }
  return out.str();
}

}  // namespace kmetric::cli

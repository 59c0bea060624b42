#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "kmetric/cli/analysis.hpp"
#include "kmetric/cli/verify.hpp"
#include "kmetric/edge_list.hpp"
#include "kmetric/fixtures.hpp"
#include "kmetric/generators.hpp"

using namespace kmetric;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(KMETRIC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kmetric_cli_test_" + name);
}

}  // namespace

TEST(Analysis, Fig1) {
  const auto r = cli::analyze(fixtures::fig1());
  EXPECT_EQ(r.dim, 2);
  EXPECT_EQ(r.A, 2);
  EXPECT_EQ(r.eta, 2);
  EXPECT_EQ(r.mu, 2);
  EXPECT_EQ(r.sigma, 4);
  EXPECT_EQ(r.diam, 6);
  EXPECT_EQ(r.diam_lower_bound, 1);
  EXPECT_FALSE(r.block_graph);  // the 4-cycle w-a-w'-b is not a clique
  EXPECT_FALSE(r.classification);
}

TEST(Analysis, Fig2) {
  const auto r = cli::analyze(fixtures::fig2());
  EXPECT_EQ(r.dim, 3);
  EXPECT_TRUE(r.block_graph);
  ASSERT_TRUE(r.classification);
  EXPECT_FALSE(r.classification->tagged);
  EXPECT_FALSE(r.classification->elementary);
  EXPECT_FALSE(r.sigma);
}

TEST(Analysis, PathAndInequalities) {
  const auto r = cli::analyze(path_graph(10));
  EXPECT_EQ(r.dim, 9);
  EXPECT_EQ(r.A, 9);
  EXPECT_FALSE(r.sigma);
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto a = cli::analyze(random_connected_graph(12, 0.2, RandomSeed{s}));
    EXPECT_LE(a.A, a.dim);
    if (a.sigma) {
      EXPECT_LE(a.dim, *a.sigma);
    }
    if (a.eta) {
      EXPECT_LE(a.dim, *a.eta);
    }
    if (a.mu) {
      EXPECT_LE(a.dim, *a.mu);
    }
  }
}

TEST(Analysis, FastModeAgreesOnBlockGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_block_graph({.n = 30}, RandomSeed{s});
    const auto full = cli::analyze(g);
    const auto fast = cli::analyze(g, {.fast = true});
    EXPECT_EQ(full.dim, fast.dim);
    EXPECT_EQ(full.mu, fast.mu);
    EXPECT_FALSE(fast.eta);
  }
}

TEST(Analysis, Errors) {
  try {
    cli::analyze(Graph(4, {{0, 1}, {2, 3}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Disconnected);
  }
}

TEST(Json, FieldsInOrderAndAbsentBoundsAreNull) {
  const auto j = cli::to_json(cli::analyze(complete_graph(4)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "edge_count", "connected", "dim", "witness_pair", "A", "sigma", "eta",
                                            "mu", "diam", "diam_lower_bound", "block_graph", "classification",
                                            "timing", "mode"}));
  EXPECT_TRUE(j["sigma"].is_null());
  EXPECT_TRUE(j["eta"].is_null());
  EXPECT_TRUE(j["mu"].is_null());
  EXPECT_TRUE(j["timing"].is_null());
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["classification"]["elementary"], true);

  const auto timed = cli::to_json(cli::analyze(complete_graph(4)), true);
  EXPECT_TRUE(timed["timing"].is_object());
  EXPECT_TRUE(timed["timing"].contains("dim"));
}

TEST(Verify, FixturesPass) {
  for (const char* name : {"fig1", "fig2"}) {
    const auto r = cli::verify_graph(fixtures::fixture(name));
    EXPECT_TRUE(r.ok()) << name;
    for (const auto& c : r.checks) EXPECT_FALSE(c.violated()) << name << ' ' << c.id;
  }
  const auto r = cli::verify_graph(fixtures::fig2());
  ASSERT_TRUE(r.find("dimension_oracle"));
  EXPECT_TRUE(r.find("dimension_oracle")->premise_held);
  EXPECT_TRUE(r.find("separator_union")->premise_held);
}

TEST(Verify, OracleLimit) {
  try {
    cli::verify_graph(fixtures::fig1(), {.oracle_max = 13});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OracleTooLarge);
  }
  // Below the order, the exponential checks are skipped rather than failed.
  const auto r = cli::verify_graph(fixtures::fig1(), {.oracle_max = 4});
  EXPECT_FALSE(r.find("separator_union")->premise_held);
}

TEST(Verify, CorpusSummaryCountsPremises) {
  cli::CorpusReport corpus;
  for (std::uint64_t s = 0; s < 20; ++s) corpus.add(cli::verify_graph(random_tree(12, RandomSeed{s})));
  EXPECT_EQ(corpus.graphs, 20);
  EXPECT_TRUE(corpus.ok());
  const auto j = cli::to_json(corpus);
  EXPECT_EQ(j["graphs"], 20);
  EXPECT_EQ(j["ok"], true);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["counterexample"].is_null());
}

TEST(Binary, AnalyzeFixtureJson) {
  const auto r = run("analyze fixture:fig1 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["sigma"], 4);
  EXPECT_EQ(j["mu"], 2);
  // Without --timing the output is reproducible byte for byte.
  EXPECT_EQ(run("analyze fixture:fig1 --json").out, r.out);
}

TEST(Binary, AnalyzeText) {
  const auto r = run("analyze fixture_fig2");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("dim               3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sigma             none"), std::string::npos) << r.out;
}

TEST(Binary, GenThenAnalyze) {
  const auto path = temp_file("gen.txt");
  ASSERT_EQ(run("gen random_block --t 20 --seed 3 -o " + path.string()).status, 0);
  const Graph g = load_edge_list(path);
  EXPECT_TRUE(is_block_graph(g));
  const auto first = run("analyze " + path.string() + " --json");
  EXPECT_EQ(first.status, 0);
  ASSERT_EQ(run("gen random_block --t 20 --seed 3 -o " + path.string()).status, 0);
  EXPECT_EQ(to_edge_list(load_edge_list(path)), to_edge_list(g));
  std::filesystem::remove(path);

  const auto p5 = run("gen path --n 5");
  EXPECT_EQ(p5.out, "5\n0 1\n1 2\n2 3\n3 4\n");
  const auto fig2 = run("gen fixture:fig2");
  EXPECT_EQ(parse_edge_list(fig2.out), fixtures::fig2());
}

TEST(Binary, GenRequiresSeedForRandomFamilies) {
  EXPECT_EQ(run("gen random_tree --n 5").status, 2);
  EXPECT_EQ(run("gen hypercube --n 5").status, 2);
  EXPECT_EQ(run("gen cycle --n 2").status, 2);
}

TEST(Binary, VerifyExitCodes) {
  EXPECT_EQ(run("verify fixture:fig1").status, 0);
  EXPECT_EQ(run("verify gen:random_block --seeds 10").status, 0);
  EXPECT_EQ(run("verify gen:random_tree:n=15 --seeds 10").status, 0);
  EXPECT_EQ(run("verify gen:random_tree").status, 2);
  EXPECT_EQ(run("verify fixture:fig1 --oracle-max 13").status, 2);
  const auto j = nlohmann::json::parse(run("verify gen:random_tree:n=12 --seeds 5 --json").out);
  EXPECT_EQ(j["graphs"], 5);
}

TEST(Binary, ParseAndConnectivityErrors) {
  const auto bad = temp_file("bad.txt");
  {
    std::ofstream out(bad);
    out << "3\n0 1\n1 q\n";
  }
  EXPECT_EQ(run("analyze " + bad.string()).status, 2);
  const auto split = temp_file("split.txt");
  {
    std::ofstream out(split);
    out << "4\n0 1\n2 3\n";
  }
  EXPECT_EQ(run("analyze " + split.string()).status, 2);
  EXPECT_EQ(run("analyze /nonexistent/graph.txt").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  std::filesystem::remove(bad);
  std::filesystem::remove(split);
}

TEST(Binary, ViolationExitCodeIsOne) {
  // The shipped corpus never violates a check, so exercise the mapping
  // through the report type the binary uses to decide its exit status.
  cli::VerifyReport report;
  report.checks.push_back({"synthetic", true, false, std::string("2\n0 1\n")});
  EXPECT_FALSE(report.ok());
  cli::CorpusReport corpus;
  corpus.add(report);
  EXPECT_FALSE(corpus.ok());
  EXPECT_EQ(corpus.checks[0].counterexample, "2\n0 1\n");
}

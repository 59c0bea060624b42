#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kmetric/cli/analysis.hpp"
#include "kmetric/cli/verify.hpp"
#include "kmetric/edge_list.hpp"
#include "kmetric/fixtures.hpp"
#include "kmetric/generators.hpp"

namespace {

using namespace kmetric;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::optional<std::string> fixture_name(const std::string& source) {
  for (const std::string prefix : {"fixture:", "fixture_"}) {
    if (source.rfind(prefix, 0) == 0) return source.substr(prefix.size());
  }
  return std::nullopt;
}

Graph load_source(const std::string& source) {
  if (auto name = fixture_name(source)) return fixtures::fixture(*name);
  return load_edge_list(source);
}

// Defaults used when a generator spec leaves a size unset.
GeneratorParams default_params(Family family) {
  GeneratorParams p;
  switch (family) {
    case Family::RandomBlock: p.cliques = 8; break;
    case Family::RandomConnected: p.n = 10; p.edge_probability = 0.2; break;
    default: p.n = 10; break;
  }
  return p;
}

int parse_param_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidParams, "parameter " + key + " expects an integer, got '" + value + "'");
}

void set_param(GeneratorParams& p, const std::string& key, const std::string& value) {
  if (key == "n") {
    p.n = parse_param_int(key, value);
  } else if (key == "t") {
    p.cliques = parse_param_int(key, value);
  } else if (key == "min") {
    p.clique_min = parse_param_int(key, value);
  } else if (key == "max") {
    p.clique_max = parse_param_int(key, value);
  } else if (key == "p") {
    try {
      p.edge_probability = std::stod(value);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidParams, "parameter p expects a number, got '" + value + "'");
    }
  } else {
    throw Error(Errc::InvalidParams, "unknown generator parameter '" + key + "'");
  }
}

struct GeneratorSpec {
  Family family;
  GeneratorParams params;
};

// gen:FAMILY[:key=value,...]
GeneratorSpec parse_generator_spec(const std::string& text) {
  const std::string body = text.substr(4);
  const auto colon = body.find(':');
  const std::string name = body.substr(0, colon);
  const auto family = parse_family(name);
  if (!family) throw Error(Errc::InvalidParams, "unknown family '" + name + "'");
  GeneratorSpec spec{*family, default_params(*family)};
  if (colon == std::string::npos) return spec;
  std::stringstream rest(body.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::InvalidParams, "expected key=value, got '" + item + "'");
    set_param(spec.params, item.substr(0, eq), item.substr(eq + 1));
  }
  return spec;
}

void print_corpus(const cli::CorpusReport& report) {
  std::cout << std::left << std::setw(34) << "check" << std::right << std::setw(8) << "graphs" << std::setw(10)
            << "premise" << std::setw(12) << "violations" << '\n';
  for (const auto& c : report.checks) {
    std::cout << std::left << std::setw(34) << c.id << std::right << std::setw(8) << c.graphs << std::setw(10)
              << c.premise_held << std::setw(12) << c.violations << '\n';
  }
  for (const auto& c : report.checks) {
    if (c.counterexample) std::cout << "\ncounterexample for " << c.id << ":\n" << *c.counterexample;
  }
  std::cout << '\n' << report.graphs << " graph(s): " << (report.ok() ? "all checks passed" : "VIOLATIONS FOUND") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-metric dimensionality of connected graphs"};
  app.require_subcommand(1);

  std::string source;
  bool json = false;
  bool fast = false;
  bool timing = false;
  auto* analyze = app.add_subcommand("analyze", "report Dim(G) and every bound for one graph");
  analyze->add_option("source", source, "edge-list file or fixture:NAME")->required();
  analyze->add_flag("--json", json, "emit one JSON object");
  analyze->add_flag("--fast", fast, "skip the eta and mu sweeps; use the block-graph algorithm when it applies");
  analyze->add_flag("--timing", timing, "include per-invariant wall-clock times (output is no longer reproducible)");

  int seeds = 0;
  int oracle_max = cli::VerifyOptions{}.oracle_max;
  auto* verify = app.add_subcommand("verify", "check every bound and lemma against brute-force oracles");
  verify->add_option("source", source, "edge-list file, fixture:NAME, or gen:FAMILY[:key=value,...]")->required();
  verify->add_option("--seeds", seeds, "run a generator spec on seeds 0..K-1")->check(CLI::PositiveNumber);
  verify->add_option("--oracle-max", oracle_max, "largest order for exponential oracles")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "emit the summary as JSON");

  std::string family_name;
  GeneratorParams params;
  std::optional<std::uint64_t> seed;
  std::string output;
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("family", family_name, "path, cycle, complete, star, random_tree, random_block, random_connected, or fixture:NAME")
      ->required();
  gen->add_option("--n", params.n, "vertex count (target order for random_block)");
  gen->add_option("--t", params.cliques, "number of glued cliques (random_block)");
  gen->add_option("--min", params.clique_min, "smallest clique size (random_block)");
  gen->add_option("--max", params.clique_max, "largest clique size (random_block)");
  gen->add_option("--p", params.edge_probability, "extra-edge probability (random_connected)");
  gen->add_option("--seed", seed, "random seed, required for random families");
  gen->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) {
      const auto report = cli::analyze(load_source(source), cli::AnalysisOptions{fast});
      if (json) {
        std::cout << cli::to_json(report, timing).dump(2) << '\n';
      } else {
        std::cout << cli::render_text(report, timing);
      }
      return kExitOk;
    }

    if (*verify) {
      const cli::VerifyOptions options{oracle_max};
      cli::CorpusReport corpus;
      if (source.rfind("gen:", 0) == 0) {
        const auto spec = parse_generator_spec(source);
        if (is_randomized(spec.family) && seeds == 0) {
          std::cerr << "error: random family '" << to_string(spec.family) << "' needs --seeds K\n";
          return kExitError;
        }
        const int runs = is_randomized(spec.family) ? seeds : 1;
        for (int s = 0; s < runs; ++s) {
          corpus.add(cli::verify_graph(generate(spec.family, spec.params, RandomSeed{static_cast<std::uint64_t>(s)}),
                                       options));
        }
      } else {
        corpus.add(cli::verify_graph(load_source(source), options));
      }
      if (json) {
        std::cout << cli::to_json(corpus).dump(2) << '\n';
      } else {
        print_corpus(corpus);
      }
      return corpus.ok() ? kExitOk : kExitViolation;
    }

    Graph g;
    if (auto name = fixture_name(family_name)) {
      g = fixtures::fixture(*name);
    } else {
      const auto family = parse_family(family_name);
      if (!family) throw Error(Errc::InvalidParams, "unknown family '" + family_name + "'");
      if (is_randomized(*family) && !seed) {
        std::cerr << "error: random family '" << family_name << "' needs --seed S\n";
        return kExitError;
      }
      GeneratorParams p = params;
      if (*family != Family::RandomBlock && p.n == 0) p.n = default_params(*family).n;
      if (*family == Family::RandomBlock && p.n == 0 && p.cliques == 0) p.cliques = default_params(*family).cliques;
      g = generate(*family, p, RandomSeed{seed.value_or(0)});
    }
    if (output.empty()) {
      write_edge_list(std::cout, g);
    } else {
      save_edge_list(output, g);
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

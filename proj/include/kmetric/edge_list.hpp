#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

// Edge-list text format: first significant line holds n, each further line
// holds "u v". Lines whose first non-blank character is '#' are comments and
// blank lines are ignored.

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (n < 0) {
      if (tokens.size() != 1) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected vertex count");
      }
      n = detail::parse_int(tokens[0], line_no);
      if (n < 0) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": negative vertex count");
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const int u = detail::parse_int(tokens[0], line_no);
    const int v = detail::parse_int(tokens[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": vertex out of range [0, " +
                                        std::to_string(n) + ")");
    }
    if (u == v) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": self-loop");
    edges.push_back({u, v});
  }
  if (n < 0) throw Error(Errc::ParseError, "missing vertex count");
  return Graph(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return read_edge_list(in);
}

inline void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

}  // namespace kmetric

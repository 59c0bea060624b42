#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kmetric/error.hpp"
#include "kmetric/graph.hpp"

namespace kmetric::fixtures {

// Vertex names, indexed by vertex id.
inline const std::vector<std::string>& fig1_labels() {
  static const std::vector<std::string> labels{"u1", "v1", "u2", "v2", "w",  "a",
                                               "b",  "w'", "v3", "u3", "v4", "u4"};
  return labels;
}

inline const std::vector<std::string>& fig2_labels() {
  static const std::vector<std::string> labels{"a", "b", "c", "d", "e", "f", "g"};
  return labels;
}

/// Twelve vertices: two pendant legs of length 2 at w and at w', and a 4-cycle
/// w-a-w'-b between them.
inline Graph fig1() {
  enum : Vertex { u1, v1, u2, v2, w, a, b, w2, v3, u3, v4, u4 };
  return Graph(12, {{u1, v1}, {v1, w}, {u2, v2}, {v2, w}, {w, a}, {w, b}, {a, w2}, {b, w2},
                    {w2, v3}, {v3, u3}, {w2, v4}, {v4, u4}});
}

/// Block graph with blocks {a,b}, {b,c,d}, {d,e,f}, {f,g}.
inline Graph fig2() {
  enum : Vertex { a, b, c, d, e, f, g };
  return Graph(7, {{a, b}, {b, c}, {b, d}, {c, d}, {d, e}, {d, f}, {e, f}, {f, g}});
}

inline Graph fixture(std::string_view name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  throw Error(Errc::UnknownFixture, std::string(name));
}

inline const std::vector<std::string>& labels(std::string_view name) {
  if (name == "fig1") return fig1_labels();
  if (name == "fig2") return fig2_labels();
  throw Error(Errc::UnknownFixture, std::string(name));
}

}  // namespace kmetric::fixtures

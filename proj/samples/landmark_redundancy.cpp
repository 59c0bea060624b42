// How many landmarks can fail before two nodes become indistinguishable?
// Dim(G) = k means: place a landmark on every vertex and every pair is still
// told apart by at least k of them, so up to k - 1 failures are survivable.

#include <iostream>

#include "kmetric/dimension.hpp"
#include "kmetric/fixtures.hpp"
#include "kmetric/geodesic_bounds.hpp"

int main() {
  using namespace kmetric;
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  const auto& names = fixtures::fig1_labels();

  const auto dim = metric_dimensionality(g, dm);
  std::cout << "Dim(G) = " << dim.k << ", tolerating " << dim.k - 1 << " landmark failure(s)\n";
  std::cout << "hardest pair: " << names[dim.witness_pair.first] << ", " << names[dim.witness_pair.second]
            << " distinguished only by {";
  for (std::size_t i = 0; i < dim.witness_set.members.size(); ++i) {
    std::cout << (i ? ", " : "") << names[dim.witness_set.members[i]];
  }
  std::cout << "}\n";

  const auto landmarks = landmark_structure(g, dm);
  if (landmarks.sigma) std::cout << "terminal-path bound: " << *landmarks.sigma << '\n';
  std::cout << "shortest maximal geodesic: " << shortest_maximal_geodesic(g, dm).length << '\n';
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kwc/graph.hpp"

namespace kwc::families {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);  // n >= 3
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);  // centre 0
Graph hypercube(int dim);
Graph petersen();
/// G(n, p) with a caller-owned seed; edges decided in (u, v) lexicographic order.
Graph random_gnp(int n, double p, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Built-in regression catalog: paths P1..P12, cycles C3..C12, K1..K12,
/// K_{d,d} for d = 1..6 (named "Kdxd"), the 3-cube and the Petersen graph.
std::vector<NamedGraph> builtin_catalog();

}  // namespace kwc::families

#include "kwc/graph_families.hpp"

#include <random>

#include "kwc/errors.hpp"

namespace kwc::families {

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph hypercube(int dim) {
  const int n = 1 << dim;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<NamedGraph> builtin_catalog() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 12; ++n) out.push_back({"P" + std::to_string(n), path(n)});
  for (int n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  for (int n = 1; n <= 12; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
  for (int d = 1; d <= 6; ++d) {
    out.push_back({"K" + std::to_string(d) + "x" + std::to_string(d), complete_bipartite(d, d)});
  }
  out.push_back({"Q3", hypercube(3)});
  out.push_back({"Petersen", petersen()});
  return out;
}

}  // namespace kwc::families

#include "kwc/graph.hpp"

#include <algorithm>
#include <string>

#include "kwc/errors.hpp"

namespace kwc {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("graph order must be non-negative");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  lists_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_masks(std::span<const std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 64) throw PreconditionError("Graph::from_masks: more than 64 rows");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((adjacency[static_cast<std::size_t>(u)] >> v) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void Graph::check(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& ru = rows_[static_cast<std::size_t>(u)];
  if (ru.contains(v)) return;
  ru.insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(lists_[static_cast<std::size_t>(u)], v);
  insert_sorted(lists_[static_cast<std::size_t>(v)], u);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  return rows_[static_cast<std::size_t>(u)].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check(v);
  return rows_[static_cast<std::size_t>(v)];
}

const std::vector<Vertex>& Graph::neighbor_list(Vertex v) const {
  check(v);
  return lists_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbor_list(v).size()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : lists_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edges_within(const VertexSet& u) const {
  std::size_t twice = 0;
  u.for_each([&](Vertex v) { twice += rows_[static_cast<std::size_t>(v)].count_common(u); });
  return twice / 2;
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && rows_[static_cast<std::size_t>(v)].intersects(s)) ok = false;
  });
  return ok;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw PreconditionError("adjacency_masks: graph has more than 64 vertices");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].to_mask();
  return out;
}

int degree_in(const Graph& g, Vertex v, const VertexSet& a) {
  if (!a.contains(v)) {
    throw PreconditionError("degree_in: vertex " + std::to_string(v) + " is not in the given set");
  }
  return static_cast<int>(g.neighbors(v).count_common(a));
}

VertexOrdering max_degree_ordering(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw PreconditionError("max_degree_ordering: empty vertex set");
  std::vector<Vertex> remaining = a.members();
  VertexSet alive = a;
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : remaining) deg[static_cast<std::size_t>(v)] = degree_in(g, v, a);

  VertexOrdering out{{}, OrderingKind::max_degree};
  out.sequence.reserve(remaining.size());
  while (!remaining.empty()) {
    // `remaining` is ascending, so the first strict maximum is the smallest index.
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (deg[static_cast<std::size_t>(remaining[i])] > deg[static_cast<std::size_t>(remaining[best])]) best = i;
    }
    const Vertex v = remaining[best];
    out.sequence.push_back(v);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    alive.erase(v);
    for (Vertex w : g.neighbor_list(v)) {
      if (alive.contains(w)) --deg[static_cast<std::size_t>(w)];
    }
  }
  return out;
}

VertexOrdering min_degree_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

  VertexOrdering out{std::vector<Vertex>(static_cast<std::size_t>(n)), OrderingKind::min_degree};
  for (int slot = n - 1; slot >= 0; --slot) {
    Vertex pick = -1;
    for (Vertex v = n - 1; v >= 0; --v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    }
    out.sequence[static_cast<std::size_t>(slot)] = pick;
    alive[static_cast<std::size_t>(pick)] = false;
    for (Vertex w : g.neighbor_list(pick)) {
      if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
  }
  return out;
}

}  // namespace kwc

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kwc/vertex_set.hpp"

namespace kwc {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on {0, ..., n-1}.
///
/// Adjacency is kept both as bit rows (fast set algebra) and as sorted
/// neighbour lists (fast sparse iteration). Symmetric, loop-free.
class Graph {
 public:
  explicit Graph(int n = 0);

  /// Throws InputError on a self-loop or an out-of-range endpoint;
  /// duplicate edges are dropped.
  static Graph from_edges(int n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] const VertexSet& neighbors(Vertex v) const;
  [[nodiscard]] const std::vector<Vertex>& neighbor_list(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const;

  [[nodiscard]] VertexSet vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  [[nodiscard]] VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }

  /// Edges (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
  /// e_G(U): number of edges with both ends in U.
  [[nodiscard]] std::size_t edges_within(const VertexSet& u) const;
  [[nodiscard]] bool is_independent(const VertexSet& s) const;
  /// Common degree if every vertex has it (0 for the empty graph on 0 vertices).
  [[nodiscard]] std::optional<int> regular_degree() const;
  [[nodiscard]] int min_degree() const;

  /// Adjacency rows as 64-bit masks; requires order() <= 64.
  [[nodiscard]] std::vector<std::uint64_t> adjacency_masks() const;
  static Graph from_masks(std::span<const std::uint64_t> adjacency);

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
};

enum class OrderingKind { max_degree, min_degree };

struct VertexOrdering {
  std::vector<Vertex> sequence;
  OrderingKind kind = OrderingKind::max_degree;
};

/// |N(v) ∩ A|; v must belong to A.
int degree_in(const Graph& g, Vertex v, const VertexSet& a);

/// Repeatedly extracts a vertex of maximum degree in the subgraph induced by
/// what is left of A; ties go to the smallest index. A must be nonempty.
VertexOrdering max_degree_ordering(const Graph& g, const VertexSet& a);

/// v_1..v_n such that each prefix graph G_{i-1} has minimum degree at least
/// deg_{G_i}(v_i) - 1. Built back to front by peeling a minimum-degree vertex;
/// among equal degrees the largest index is peeled first, so ties read in
/// ascending index order in the result.
VertexOrdering min_degree_ordering(const Graph& g);

}  // namespace kwc

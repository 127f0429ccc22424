#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kwc/bigint.hpp"
#include "kwc/bounds.hpp"
#include "kwc/graph.hpp"
#include "kwc/oracle.hpp"

namespace kwc::c4 {

using oracle::Mask;

/// H joins x != y when they share a neighbour in G.
struct SquareGraph {
  Graph base;
  Graph square;
};
SquareGraph square_graph(const Graph& g);
std::vector<Mask> square_masks(std::span<const Mask> adjacency);

/// Common neighbours of x and y in G. On a C4-free G every edge of the square has exactly one.
int witness_count(const Graph& g, Vertex x, Vertex y);

/// Ways to attach a new vertex with exactly d neighbours so that G stays
/// C4-free, i.e. i(H, d). G must be C4-free and 0 <= d <= n.
BigInt count_c4_extensions(const Graph& g, int d);
/// The same count for every d at once.
CountTable c4_extension_profile(const Graph& g);
std::vector<std::uint64_t> c4_extension_profile(std::span<const Mask> adjacency);

struct EhIdentityReport {
  long long square_edges = 0;   // e_H(B)
  long long binomial_sum = 0;   // sum over z of binom(deg(z, B), 2)
  double jensen_lower = 0.0;    // n binom(sum_z deg(z, B) / n, 2)
  [[nodiscard]] bool identity_holds() const { return square_edges == binomial_sum; }
  [[nodiscard]] bool jensen_holds() const { return static_cast<double>(square_edges) + 1e-9 >= jensen_lower; }
};
/// Edges of H inside B against the common-neighbour sum. G must be C4-free.
EhIdentityReport eh_identity_report(const Graph& g, const VertexSet& b);
bool eh_identity_check(const Graph& g, const VertexSet& b);

/// How the fingerprint size is chosen in the large-degree branch.
///   minimal: smallest q >= 0 with e^{-beta q} n <= R
///   polylog: q = ceil(3 (ln n)^3)
enum class QRule { minimal, polylog };

/// log2 of an upper bound on g_n(d), the ways to attach a degree-d vertex to
/// an n-vertex C4-free graph of minimum degree >= d - 1. For d <= sqrt(n)/ln n
/// this is binom(n, d); above it the local-density count bound with
/// R = 2n/(d-1), beta = (d-1)^2/(2n) is used when its hypotheses hold, and
/// binom(n, d) otherwise.
LogBound c4_extension_bound(long long n, long long d, QRule rule = QRule::minimal);

/// 2 log2 n! + sum_{i=2}^{n} max_d c4_extension_bound(i-1, d).
LogBound c4_free_count_bound(long long n, QRule rule = QRule::minimal);

}  // namespace kwc::c4

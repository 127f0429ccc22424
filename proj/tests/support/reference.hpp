// Slow, obviously-correct reference computations shared by the unit and
// acceptance tests. Nothing here calls into the library's counting code.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "kwc/bigint.hpp"
#include "kwc/graph.hpp"

namespace ref {

using kwc::BigInt;
using kwc::Graph;
using Mask = std::uint64_t;

inline std::vector<Mask> masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

inline bool independent(const std::vector<Mask>& adj, Mask set) {
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & set) return false;
  }
  return true;
}

/// i(G, m) for every m = 0..n by testing every subset.
inline std::vector<std::uint64_t> independent_counts(const Graph& g) {
  const auto adj = masks(g);
  const int n = g.order();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (independent(adj, s)) ++out[static_cast<std::size_t>(std::popcount(s))];
  }
  return out;
}

inline std::uint64_t total(const std::vector<std::uint64_t>& counts) {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

/// Pascal's triangle in big integers.
inline BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

inline BigInt power(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// Looks for a 4-cycle a-b-c-d-a by brute force over ordered quadruples.
inline bool has_c4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a)) return true;
        }
  return false;
}

inline bool has_3ap(const std::vector<int>& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b[i] < b[j] && b[j] < b[k] && b[j] - b[i] == b[k] - b[j]) return true;
  return false;
}

inline bool sum_free(const std::vector<int>& a) {
  for (int x : a)
    for (int y : a)
      if (std::find(a.begin(), a.end(), x + y) != a.end()) return false;
  return true;
}

/// A maximal independent set built greedily along a random vertex order.
inline kwc::VertexSet random_maximal_independent(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  kwc::VertexSet s(static_cast<std::size_t>(g.order()));
  for (int v : order) {
    bool free = true;
    s.for_each([&](int u) { free = free && !g.adjacent(u, v); });
    if (free) s.insert(v);
  }
  return s;
}

}  // namespace ref

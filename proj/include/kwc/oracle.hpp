#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kwc/bigint.hpp"
#include "kwc/graph.hpp"

namespace kwc {

/// Exact counts indexed by size, with their sum.
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(std::vector<BigInt> by_size);

  [[nodiscard]] const std::vector<BigInt>& by_size() const { return by_size_; }
  /// Count at size m; zero past the end.
  [[nodiscard]] BigInt at(std::size_t m) const;
  [[nodiscard]] const BigInt& total() const { return total_; }
  /// Largest m with a nonzero count (-1 for an all-zero table).
  [[nodiscard]] int max_size() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::vector<BigInt> by_size_;
  BigInt total_ = 0;
};

/// "m,count" header, one row per size up to the largest nonzero one, then "total,<sum>".
void write_count_table(std::ostream& out, const CountTable& t);

}  // namespace kwc

namespace kwc::oracle {

using Mask = std::uint64_t;

inline constexpr int kIndependentSetCap = 40;
inline constexpr int kExhaustiveCap = 20;
inline constexpr int kSumFreeCap = 24;
inline constexpr int kApFreeCap = 30;
inline constexpr int kMaxApFreeCap = 40;
inline constexpr int kC4FreeGraphCap = 6;

/// Independent-set polynomial of a mask graph: coefficient m counts the
/// independent m-sets. Branches on a maximum-degree vertex, splits connected
/// components, memoises large subproblems. Order at most 64.
std::vector<std::uint64_t> independent_set_polynomial(std::span<const Mask> adjacency);

/// i(G, m) for all m by branch and bound.
CountTable count_independent_sets(const Graph& g, int cap = kIndependentSetCap);
/// Same table by testing all 2^n subsets.
CountTable count_independent_sets_exhaustive(const Graph& g, int cap = kExhaustiveCap);
int independence_number(const Graph& g, int cap = kIndependentSetCap);

/// No x, y, z in the set with x + y = z (x = y allowed). Elements must be positive.
bool is_sum_free(std::span<const long long> set);
/// Sum-free subsets of {1..n} by size, depth-first with forbidden-sum masks.
CountTable count_sum_free(int n, int cap = kSumFreeCap);
/// Same table by testing all 2^n subsets.
CountTable count_sum_free_exhaustive(int n, int cap = kExhaustiveCap);
/// Every sum-free subset of {1..n}, as sorted vectors.
std::vector<std::vector<int>> list_sum_free(int n, int cap = kExhaustiveCap);

/// Triples (x, x+d, x+2d), d >= 1, with all three in B. Elements of B must lie in [1, n].
std::uint64_t count_3aps(std::span<const int> b, int n);
/// a(B, m) for all m: subsets of B without a 3-term AP, by size.
CountTable count_3ap_free(std::span<const int> b, int cap = kApFreeCap);
/// a([n], m) for all m.
CountTable count_3ap_free(int n, int cap = kApFreeCap);
/// Same table for [n] by testing all 2^n subsets.
CountTable count_3ap_free_exhaustive(int n, int cap = kExhaustiveCap);
/// Largest AP-free subset of A, by branch and bound.
int max_3ap_free_subset(std::span<const int> a, int cap = kMaxApFreeCap);
/// Whether A has an AP-free subset of at least `target` elements.
bool has_3ap_free_subset_of_size(std::span<const int> a, int target, int cap = kMaxApFreeCap);
/// Same maximum by testing every subset; |A| <= 20.
int max_3ap_free_subset_exhaustive(std::span<const int> a);

/// Some pair of vertices has at least two common neighbours.
bool has_c4(const Graph& g);
bool has_c4(std::span<const Mask> adjacency);

struct C4Census {
  BigInt count;   // labelled C4-free graphs on n vertices
  int max_edges;  // ex(n, C4)
};
/// Gray-code sweep over all 2^{n(n-1)/2} labelled graphs.
C4Census c4_free_census(int n, int cap = kC4FreeGraphCap);
BigInt count_c4_free_graphs(int n, int cap = kC4FreeGraphCap);

}  // namespace kwc::oracle

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "kwc/bounds.hpp"
#include "kwc/graph.hpp"

namespace kwc::arith {

// ---------------------------------------------------------------------------
// Sum-free sets
// ---------------------------------------------------------------------------

/// Circulant graph on {1..n}: x ~ y when y - x is congruent to some s or -s
/// modulo n. Vertex x is stored at index x - 1. S must be a nonempty subset
/// of {1, ..., ceil(n/2) - 1}; the result is 2|S|-regular.
Graph build_gs_graph(int n, std::span<const int> shifts);

struct SumFreeInstance {
  int n = 0;
  std::vector<int> shifts;
  Graph graph;
};
SumFreeInstance make_sum_free_instance(int n, std::span<const int> shifts);

enum class ReductionCheck { holds, violated, not_applicable };

/// Takes S_A = the t smallest elements of a sum-free A ⊆ [n] and tests that
/// A \ S_A is independent in G_{S_A}. not_applicable when S_A leaves
/// {1, ..., ceil(n/2) - 1}. Always holds when t = 0 or t = |A|, since there is
/// then nothing to test.
ReductionCheck sum_free_independence_check(std::span<const int> a, int n, int t);

/// log2 of (n/2)^{n^{2/3}} 2^{n/2+1} + binom(n/2, n^{2/3}) 2^{s}, where s is the
/// regular-graph bound with constant `c_reg` on the 2 floor(n^{2/3})-regular G_S.
LogBound sum_free_count_bound(long long n, double c_reg);

// ---------------------------------------------------------------------------
// 3-term arithmetic progressions
// ---------------------------------------------------------------------------

using Triple = std::array<int, 3>;

/// All (x, x+d, x+2d) with d >= 1 inside [n].
struct ApInstance {
  int n = 0;
  std::vector<Triple> triples;

  /// Number of triples containing x.
  [[nodiscard]] int degree(int x) const;
  /// Number of triples containing x with all three entries in `b` (a membership table indexed by value).
  [[nodiscard]] int degree_within(int x, const std::vector<bool>& b) const;
};
ApInstance build_3ap_hypergraph(int n);

/// Pairs {x, y} ⊆ B that form a progression with some z ∈ W. Vertex i is
/// labels[i], labels = sorted B.
struct GwGraph {
  std::vector<int> labels;
  Graph graph;
  /// Number of z ∈ W with {x, y, z} a progression (x, y given by index).
  [[nodiscard]] int witnesses(Vertex x, Vertex y, std::span<const int> w) const;
};
GwGraph build_gw_graph(std::span<const int> b, std::span<const int> w, const ApInstance& ap);

/// Elements of B lying in at least beta n progressions inside B.
std::vector<int> heavy_elements(std::span<const int> b, double beta, const ApInstance& ap);

/// Smallest integer size k with k >= delta |A| (within 1e-9).
int roth_threshold(std::size_t size, double delta);

/// Every B ⊆ A with |B| >= delta |A| contains a 3-term AP. |A| <= 40. False for empty A.
bool is_delta_roth(std::span<const int> a, double delta);

/// m distinct elements of [n] drawn by a partial Fisher-Yates shuffle driven
/// by mt19937_64(seed).
std::vector<int> sample_subset(int n, int m, std::uint64_t seed);

struct ExperimentResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  [[nodiscard]] double probability() const { return static_cast<double>(successes) / static_cast<double>(trials); }
};
/// Trial i samples with seed ^ i and records whether the sample is delta-Roth.
ExperimentResult roth_random_experiment(int n, int m, double delta, std::uint64_t trials, std::uint64_t seed);

/// One application of the density-increment recursion for AP-free counts.
struct RothRecursionState {
  long long n = 0;
  long long n_prime = 0;
  long long m_remaining = 0;
  int step = 0;
  double epsilon = 0.0;
  double beta = 0.0;
  long long w = 0;          // floor(sqrt n), size of the pinned set W
  long long q = 0;          // floor(sqrt n), fingerprint size
  double log2_factor = 0.0; // accumulated log2 of 2 binom(n, w)^2 per step

  static RothRecursionState start(long long n, long long m, double epsilon, double beta);
  /// n' -= ceil(beta n / 12), m -= 2 floor(sqrt n).
  void advance();
};

/// ceil((12 - 6 epsilon) / beta).
int default_recursion_depth(double epsilon, double beta);

/// log2 of 2^K binom(n, floor sqrt n)^{2K} binom(epsilon n / 2, m - 2K floor sqrt n).
LogBound ap_free_recursion_bound(long long n, long long m, double epsilon, double beta, int k);

struct VarnavidesProfile {
  std::uint64_t min_count = 0;
  double beta_estimate = 0.0;
};
/// Minimum number of 3-APs over B ⊆ [n] with |B| >= delta n. n <= 22.
VarnavidesProfile varnavides_profile(int n, double delta);

}  // namespace kwc::arith

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwc/bounds.hpp"
#include "kwc/graph.hpp"

namespace kwc {

/// What happened to the live set during one round of the encoder.
struct KwStep {
  int position = 0;             // j_s, 1-based
  Vertex chosen = -1;           // v_{j_s}
  std::size_t live_before = 0;  // |A| at the start of the round
  std::size_t live_trimmed = 0; // |A'|, A minus the first j_s - 1 ordered vertices
  std::size_t edges_trimmed = 0;// e_G(A')
  int chosen_degree = 0;        // deg_G(v_{j_s}, A')
  int max_degree_trimmed = 0;   // max over A' of deg_G(., A')
  std::size_t live_after = 0;   // |A| at the end of the round
};

/// Output of one run of the Kleitman-Winston encoder.
struct KwTrace {
  int q = 0;
  std::vector<int> positions;  // j_1..j_q
  VertexSet selected;          // S
  VertexSet survivors;         // final A
  VertexSet leftover;          // final A ∩ I
  std::vector<KwStep> steps;
};

/// Encodes independent set `i` in `q` rounds: order the live set by
/// max-degree, take the first member of `i`, drop everything before it and
/// its live neighbours.
KwTrace kw_run(const Graph& g, const VertexSet& i, int q);

/// Replays the live-set evolution from positions alone and returns S ∪ leftover.
/// Throws MalformedTraceError if a position falls outside the live set.
VertexSet kw_reconstruct(const Graph& g, int q, std::span<const int> positions, const VertexSet& leftover);

/// The set S chosen by kw_run; fingerprint(g, fingerprint(g, I, q), q) = fingerprint(g, I, q).
VertexSet fingerprint(const Graph& g, const VertexSet& i, int q);

/// "q; j_1,...,j_q; S; A" with comma-separated members.
std::string format_trace(const KwTrace& t);
struct ParsedTrace {
  int q = 0;
  std::vector<int> positions;
  std::vector<Vertex> selected;
  std::vector<Vertex> survivors;
};
ParsedTrace parse_trace(std::string_view line);

struct Container {
  std::vector<int> positions;
  VertexSet fingerprint;  // S, q elements
  VertexSet container;    // f(S), the live set after q rounds
};

/// Image of the fingerprint map together with its containers, keyed by S.
class ContainerFamily {
 public:
  ContainerFamily(int q, std::vector<Container> entries);

  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const std::vector<Container>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Container* find(const VertexSet& fingerprint) const;
  [[nodiscard]] std::size_t max_container_size() const;
  [[nodiscard]] std::vector<std::size_t> container_sizes() const;

 private:
  int q_;
  std::vector<Container> entries_;  // sorted by fingerprint
};

/// Depth-first walk over every position sequence the encoder can emit on an
/// independent set with at least q elements. Throws ResourceError carrying the
/// number of containers found so far once more than `node_cap` search nodes
/// have been visited.
ContainerFamily enumerate_containers(const Graph& g, int q, std::uint64_t node_cap = 10'000'000);

/// log2 of binom(n, q) binom(floor(R), m - q).
LogBound local_density_count_bound(long long n, long long q, double r, long long m);

/// Exact bound binom(n, q) binom(floor(R), m - q) as an integer.
BigInt local_density_count_bound_exact(long long n, long long q, double r, long long m);

/// Minimum of e_G(U) over all U with |U| = k, for each k = 0..n (exhaustive).
class DensityProfile {
 public:
  static constexpr int kDefaultCap = 20;
  explicit DensityProfile(const Graph& g, int cap = kDefaultCap);

  [[nodiscard]] int order() const { return static_cast<int>(min_edges_.size()) - 1; }
  [[nodiscard]] std::size_t min_edges(int k) const { return min_edges_.at(static_cast<std::size_t>(k)); }
  /// Every U with |U| >= R has e_G(U) >= beta binom(|U|, 2).
  [[nodiscard]] bool satisfies_beta(double r, double beta) const;
  /// Every U with |U| >= R has 2 e_G(U) >= D |U|.
  [[nodiscard]] bool satisfies_average_degree(double r, double d) const;

 private:
  std::vector<std::size_t> min_edges_;
};

bool verify_density_beta(const Graph& g, double r, double beta, int cap = DensityProfile::kDefaultCap);
bool verify_density_D(const Graph& g, double r, double d, int cap = DensityProfile::kDefaultCap);

/// log2( sum_{m<q} binom(n, m) + sum over containers of 2^{|f(S)|} ).
LogBound total_count_bound(long long n, int q, std::span<const std::size_t> container_sizes);

}  // namespace kwc

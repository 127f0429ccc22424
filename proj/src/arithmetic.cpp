#include "kwc/arithmetic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "kwc/errors.hpp"
#include "kwc/oracle.hpp"

namespace kwc::arith {

namespace {

std::vector<int> sorted_unique(std::span<const int> xs) {
  std::vector<int> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long long isqrt(long long n) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Graph build_gs_graph(int n, std::span<const int> shifts) {
  if (shifts.empty()) throw PreconditionError("build_gs_graph: shift set must be nonempty");
  const int limit = (n + 1) / 2 - 1;  // ceil(n/2) - 1
  for (int s : shifts) {
    if (s < 1 || s > limit) {
      throw PreconditionError("build_gs_graph: shift " + std::to_string(s) + " outside {1, ..., " +
                              std::to_string(limit) + "}");
    }
  }
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int s : shifts) g.add_edge(x, (x + s) % n);
  }
  return g;
}

SumFreeInstance make_sum_free_instance(int n, std::span<const int> shifts) {
  return {n, sorted_unique(shifts), build_gs_graph(n, shifts)};
}

ReductionCheck sum_free_independence_check(std::span<const int> a, int n, int t) {
  const auto members = sorted_unique(a);
  for (int x : members) {
    if (x < 1 || x > n) throw PreconditionError("sum_free_independence_check: element outside [1, n]");
  }
  std::vector<long long> wide(members.begin(), members.end());
  if (!oracle::is_sum_free(wide)) throw PreconditionError("sum_free_independence_check: set is not sum-free");
  if (t < 0 || static_cast<std::size_t>(t) > members.size()) {
    throw PreconditionError("sum_free_independence_check: need 0 <= t <= |A|");
  }
  // Nothing is left to test when t = 0 (edgeless graph) or t = |A| (empty remainder).
  if (t == 0 || static_cast<std::size_t>(t) == members.size()) return ReductionCheck::holds;
  const std::span<const int> smallest(members.data(), static_cast<std::size_t>(t));
  if (smallest.back() > (n + 1) / 2 - 1) return ReductionCheck::not_applicable;
  const Graph gs = build_gs_graph(n, smallest);
  VertexSet rest(static_cast<std::size_t>(n));
  for (std::size_t i = static_cast<std::size_t>(t); i < members.size(); ++i) rest.insert(members[i] - 1);
  return gs.is_independent(rest) ? ReductionCheck::holds : ReductionCheck::violated;
}

LogBound sum_free_count_bound(long long n, double c_reg) {
  if (n < 8) throw PreconditionError("sum_free_count_bound: n must be at least 8");
  const auto nd = static_cast<double>(n);
  const double small_part = std::cbrt(nd * nd);
  const long long small_floor = static_cast<long long>(std::floor(small_part + 1e-9));
  const double first = small_part * std::log2(nd / 2.0) + nd / 2.0 + 1.0;
  const double second =
      bounds::log2_binomial(nd / 2.0, small_floor) + bounds::sapozhenko_bound(n, 2 * small_floor, c_reg).log2_value;
  return {bounds::log2_add(first, second), "sum-free-count", {{"n", nd}, {"C_reg", c_reg}}};
}

int ApInstance::degree(int x) const {
  int d = 0;
  for (const auto& t : triples) {
    if (t[0] == x || t[1] == x || t[2] == x) ++d;
  }
  return d;
}

int ApInstance::degree_within(int x, const std::vector<bool>& b) const {
  int d = 0;
  for (const auto& t : triples) {
    if ((t[0] == x || t[1] == x || t[2] == x) && b[static_cast<std::size_t>(t[0])] &&
        b[static_cast<std::size_t>(t[1])] && b[static_cast<std::size_t>(t[2])]) {
      ++d;
    }
  }
  return d;
}

ApInstance build_3ap_hypergraph(int n) {
  ApInstance ap;
  ap.n = std::max(n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int d = 1; x + 2 * d <= n; ++d) ap.triples.push_back({x, x + d, x + 2 * d});
  }
  return ap;
}

int GwGraph::witnesses(Vertex x, Vertex y, std::span<const int> w) const {
  const int a = labels[static_cast<std::size_t>(x)];
  const int b = labels[static_cast<std::size_t>(y)];
  int count = 0;
  for (int z : w) {
    if (z == a || z == b) continue;
    std::array<int, 3> t{a, b, z};
    std::sort(t.begin(), t.end());
    if (t[1] - t[0] == t[2] - t[1]) ++count;
  }
  return count;
}

GwGraph build_gw_graph(std::span<const int> b, std::span<const int> w, const ApInstance& ap) {
  GwGraph out;
  out.labels = sorted_unique(b);
  const auto pinned = sorted_unique(w);
  for (int z : pinned) {
    if (!std::binary_search(out.labels.begin(), out.labels.end(), z)) {
      throw PreconditionError("build_gw_graph: W is not a subset of B");
    }
  }
  auto index_of = [&](int x) -> int {
    auto it = std::lower_bound(out.labels.begin(), out.labels.end(), x);
    return it != out.labels.end() && *it == x ? static_cast<int>(it - out.labels.begin()) : -1;
  };
  out.graph = Graph(static_cast<int>(out.labels.size()));
  for (const auto& t : ap.triples) {
    for (int k = 0; k < 3; ++k) {
      if (!std::binary_search(pinned.begin(), pinned.end(), t[static_cast<std::size_t>(k)])) continue;
      const int x = index_of(t[static_cast<std::size_t>((k + 1) % 3)]);
      const int y = index_of(t[static_cast<std::size_t>((k + 2) % 3)]);
      if (x >= 0 && y >= 0) out.graph.add_edge(x, y);
    }
  }
  return out;
}

std::vector<int> heavy_elements(std::span<const int> b, double beta, const ApInstance& ap) {
  const auto members = sorted_unique(b);
  std::vector<bool> in(static_cast<std::size_t>(ap.n) + 1, false);
  for (int x : members) {
    if (x < 1 || x > ap.n) throw PreconditionError("heavy_elements: element outside [1, n]");
    in[static_cast<std::size_t>(x)] = true;
  }
  std::vector<int> out;
  for (int x : members) {
    if (ap.degree_within(x, in) >= beta * ap.n) out.push_back(x);
  }
  return out;
}

int roth_threshold(std::size_t size, double delta) {
  return static_cast<int>(std::ceil(delta * static_cast<double>(size) - 1e-9));
}

bool is_delta_roth(std::span<const int> a, double delta) {
  const auto members = sorted_unique(a);
  const int target = std::max(0, roth_threshold(members.size(), delta));
  return !oracle::has_3ap_free_subset_of_size(members, target);
}

std::vector<int> sample_subset(int n, int m, std::uint64_t seed) {
  if (m < 0 || m > n) throw PreconditionError("sample_subset: need 0 <= m <= n");
  std::mt19937_64 rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < m; ++i) {
    // Unbiased draw from [i, n) by rejection, independent of the standard library's distributions.
    const std::uint64_t span = static_cast<std::uint64_t>(n - i);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i) + r % span]);
  }
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

ExperimentResult roth_random_experiment(int n, int m, double delta, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionError("roth_random_experiment: zero trials leave the rate undefined");
  if (m < 0 || m > n) throw PreconditionError("roth_random_experiment: need 0 <= m <= n");
  if (m > oracle::kMaxApFreeCap) {
    throw ResourceError("roth_random_experiment: m = " + std::to_string(m) + " exceeds cap " +
                        std::to_string(oracle::kMaxApFreeCap));
  }
  ExperimentResult result;
  result.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (is_delta_roth(sample_subset(n, m, seed ^ i), delta)) ++result.successes;
  }
  return result;
}

RothRecursionState RothRecursionState::start(long long n, long long m, double epsilon, double beta) {
  RothRecursionState s;
  s.n = n;
  s.n_prime = n;
  s.m_remaining = m;
  s.epsilon = epsilon;
  s.beta = beta;
  s.w = isqrt(n);
  s.q = s.w;
  return s;
}

void RothRecursionState::advance() {
  const auto shrink = static_cast<long long>(std::ceil(beta * static_cast<double>(n) / 12.0));
  n_prime -= shrink;
  m_remaining -= 2 * w;
  log2_factor += 1.0 + 2.0 * bounds::log2_binomial(static_cast<double>(n), w);
  ++step;
}

int default_recursion_depth(double epsilon, double beta) {
  if (!(beta > 0.0)) throw PreconditionError("default_recursion_depth: beta must be positive");
  return static_cast<int>(std::ceil((12.0 - 6.0 * epsilon) / beta));
}

LogBound ap_free_recursion_bound(long long n, long long m, double epsilon, double beta, int k) {
  if (k < 0) throw PreconditionError("ap_free_recursion_bound: K must be non-negative");
  auto state = RothRecursionState::start(n, m, epsilon, beta);
  if (m < 2LL * k * state.w) {
    throw PreconditionError("ap_free_recursion_bound: need m >= 2K floor(sqrt n)");
  }
  for (int i = 0; i < k; ++i) state.advance();
  const double value =
      state.log2_factor + bounds::log2_binomial(epsilon * static_cast<double>(n) / 2.0, state.m_remaining);
  return {value,
          "ap-free-recursion",
          {{"n", static_cast<double>(n)},
           {"m", static_cast<double>(m)},
           {"epsilon", epsilon},
           {"beta", beta},
           {"K", static_cast<double>(k)}}};
}

VarnavidesProfile varnavides_profile(int n, double delta) {
  if (n < 1) throw PreconditionError("varnavides_profile: n must be positive");
  if (n > 22) throw ResourceError("varnavides_profile: n = " + std::to_string(n) + " exceeds cap 22");
  const int threshold = std::max(0, roth_threshold(static_cast<std::size_t>(n), delta));
  if (threshold > n) throw PreconditionError("varnavides_profile: no subset reaches delta n");
  std::uint64_t best = ~std::uint64_t{0};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < total; ++set) {
    if (std::popcount(set) < threshold) continue;
    std::uint64_t count = 0;
    for (int d = 1; 2 * d < n; ++d) count += static_cast<std::uint64_t>(std::popcount(set & (set >> d) & (set >> (2 * d))));
    best = std::min(best, count);
  }
  return {best, static_cast<double>(best) / (static_cast<double>(n) * n)};
}

}  // namespace kwc::arith

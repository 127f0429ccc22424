#include "kwc/c4.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "kwc/errors.hpp"
#include "kwc/kw_engine.hpp"

namespace kwc::c4 {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_c4_free(const Graph& g, const char* who) {
  if (oracle::has_c4(g)) throw PreconditionError(std::string(who) + ": graph contains a C4");
}

double log2_factorial(long long n) { return std::lgamma(static_cast<double>(n) + 1.0) / kLn2; }

struct Branch {
  double value;
  const char* provenance;
  long long q;
};

// log2 binom(a, b) for integer arguments.
using LogBinomial = double (*)(const void*, long long, long long);

double lgamma_binomial(const void*, long long a, long long b) {
  return bounds::log2_binomial(static_cast<double>(a), b);
}

// Table of log2 k! for k <= size, for evaluating many binomials in a row.
struct LogFactorials {
  std::vector<double> table;
  explicit LogFactorials(long long size) : table(static_cast<std::size_t>(size) + 1) {
    for (long long k = 0; k <= size; ++k) table[static_cast<std::size_t>(k)] = log2_factorial(k);
  }
  static double binomial(const void* self, long long a, long long b) {
    if (b < 0 || a < b) return -INFINITY;
    const auto& t = static_cast<const LogFactorials*>(self)->table;
    return t[static_cast<std::size_t>(a)] - t[static_cast<std::size_t>(b)] - t[static_cast<std::size_t>(a - b)];
  }
};

Branch extension_branch(long long n, long long d, QRule rule, LogBinomial binom = lgamma_binomial,
                        const void* ctx = nullptr) {
  const auto nd = static_cast<double>(n);
  if (d == 0) return {0.0, "c4-extension (d=0)", 0};
  const double small_cut = n <= 1 ? INFINITY : std::sqrt(nd) / std::log(nd);
  const double fallback = binom(ctx, n, d);
  if (static_cast<double>(d) <= small_cut) return {fallback, "c4-extension (small d)", 0};
  if (d < 2) return {fallback, "c4-extension (binomial fallback)", 0};

  const double r = 2.0 * nd / static_cast<double>(d - 1);
  const double beta = static_cast<double>(d - 1) * static_cast<double>(d - 1) / (2.0 * nd);
  long long q = 0;
  if (rule == QRule::polylog) {
    const double ln = std::log(nd);
    q = static_cast<long long>(std::ceil(3.0 * ln * ln * ln));
  } else if (r < nd) {
    q = static_cast<long long>(std::ceil(std::log(nd / r) / beta - 1e-12));
    while (q > 0 && std::exp(-beta * static_cast<double>(q - 1)) * nd <= r) --q;
    while (std::exp(-beta * static_cast<double>(q)) * nd > r) ++q;
  }
  if (q > d || std::exp(-beta * static_cast<double>(q)) * nd > r * (1.0 + 1e-12)) {
    return {fallback, "c4-extension (binomial fallback)", q};
  }
  const auto r_floor = static_cast<long long>(std::floor(r));
  const double value = binom(ctx, n, q) + binom(ctx, r_floor, d - q);
  return {value, "c4-extension (local density)", q};
}

}  // namespace

SquareGraph square_graph(const Graph& g) {
  Graph h(g.order());
  for (Vertex z = 0; z < g.order(); ++z) {
    const auto nbrs = g.neighbor_list(z);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) h.add_edge(nbrs[i], nbrs[j]);
    }
  }
  return {g, std::move(h)};
}

std::vector<Mask> square_masks(std::span<const Mask> adjacency) {
  std::vector<Mask> h(adjacency.size(), 0);
  for (std::size_t z = 0; z < adjacency.size(); ++z) {
    for (Mask rest = adjacency[z]; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      h[x] |= adjacency[z] & ~(Mask{1} << x);
    }
  }
  return h;
}

int witness_count(const Graph& g, Vertex x, Vertex y) {
  return static_cast<int>(g.neighbors(x).count_common(g.neighbors(y)));
}

BigInt count_c4_extensions(const Graph& g, int d) {
  if (d < 0 || d > g.order()) throw PreconditionError("count_c4_extensions: need 0 <= d <= n");
  return c4_extension_profile(g).at(static_cast<std::size_t>(d));
}

CountTable c4_extension_profile(const Graph& g) {
  require_c4_free(g, "c4_extension_profile");
  const auto h = square_graph(g).square;
  return oracle::count_independent_sets(h);
}

std::vector<std::uint64_t> c4_extension_profile(std::span<const Mask> adjacency) {
  if (oracle::has_c4(adjacency)) throw PreconditionError("c4_extension_profile: graph contains a C4");
  const auto h = square_masks(adjacency);
  return oracle::independent_set_polynomial(h);
}

EhIdentityReport eh_identity_report(const Graph& g, const VertexSet& b) {
  require_c4_free(g, "eh_identity_check");
  if (b.universe() != static_cast<std::size_t>(g.order())) {
    throw PreconditionError("eh_identity_check: B lives in a different universe");
  }
  EhIdentityReport report;
  const auto h = square_graph(g).square;
  report.square_edges = static_cast<long long>(h.edges_within(b));
  long long degree_sum = 0;
  for (Vertex z = 0; z < g.order(); ++z) {
    const auto k = static_cast<long long>(g.neighbors(z).count_common(b));
    report.binomial_sum += k * (k - 1) / 2;
    degree_sum += k;
  }
  const auto n = static_cast<double>(g.order());
  if (n > 0) {
    const double avg = static_cast<double>(degree_sum) / n;
    report.jensen_lower = n * avg * (avg - 1.0) / 2.0;
  }
  return report;
}

bool eh_identity_check(const Graph& g, const VertexSet& b) {
  const auto r = eh_identity_report(g, b);
  return r.identity_holds() && r.jensen_holds();
}

LogBound c4_extension_bound(long long n, long long d, QRule rule) {
  if (n < 0 || d < 0 || d > n) throw PreconditionError("c4_extension_bound: need 0 <= d <= n");
  const auto branch = extension_branch(n, d, rule);
  const auto nd = static_cast<double>(n);
  const double implied = n > 0 ? branch.value * kLn2 / std::sqrt(nd) : 0.0;
  return {branch.value,
          branch.provenance,
          {{"n", nd}, {"d", static_cast<double>(d)}, {"q", static_cast<double>(branch.q)}, {"C_implied", implied}}};
}

LogBound c4_free_count_bound(long long n, QRule rule) {
  if (n < 1) throw PreconditionError("c4_free_count_bound: n must be positive");
  // R = 2m/(d-1) never exceeds 2m, and the polylog q may pass m.
  const LogFactorials table(std::max(2 * n, 64LL + static_cast<long long>(3 * std::pow(std::log(n + 1.0), 3))));
  double total = 2.0 * log2_factorial(n);
  for (long long i = 2; i <= n; ++i) {
    const long long m = i - 1;
    double best = 0.0;
    for (long long d = 1; d <= m; ++d) {
      best = std::max(best, extension_branch(m, d, rule, LogFactorials::binomial, &table).value);
    }
    total += best;
  }
  const auto nd = static_cast<double>(n);
  return {total, "c4-free-count", {{"n", nd}, {"C_implied", total / (nd * std::sqrt(nd))}}};
}

}  // namespace kwc::c4

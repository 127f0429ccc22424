#include "kwc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "kwc/c4.hpp"
#include "kwc/errors.hpp"
#include "kwc/kw_engine.hpp"
#include "kwc/oracle.hpp"
#include "kwc/spectral.hpp"

namespace kwc {

namespace {

constexpr int kKwCap = 14;
constexpr int kContainerCap = 12;
constexpr int kContainerMaxQ = 3;
constexpr int kC4WitnessCap = 12;
constexpr int kC4SubsetCap = 10;

using Check = std::function<bool(const Graph&, std::string&)>;

bool oracle_agreement(const Graph& g, std::string& detail) {
  const auto fast = oracle::count_independent_sets(g);
  const auto slow = oracle::count_independent_sets_exhaustive(g);
  if (fast == slow) return true;
  detail = "branch-and-bound " + fast.total().str() + " vs exhaustive " + slow.total().str();
  return false;
}

bool sandwich(const Graph& g, std::string& detail) {
  const auto t = oracle::count_independent_sets(g);
  const int alpha = t.max_size();
  BigInt upper = 0;
  for (int m = 0; m <= alpha; ++m) upper += binomial(g.order(), m);
  if (pow_big(2, static_cast<unsigned>(alpha)) <= t.total() && t.total() <= upper) return true;
  detail = "i(G)=" + t.total().str() + " alpha=" + std::to_string(alpha);
  return false;
}

bool min_degree_property(const Graph& g, std::string& detail) {
  const auto order = min_degree_ordering(g).sequence;
  const int n = g.order();
  VertexSet prefix(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    if (i > 0) {
      int delta = n;
      prefix.for_each([&](Vertex u) { delta = std::min(delta, degree_in(g, u, prefix)); });
      prefix.insert(v);
      if (delta < degree_in(g, v, prefix) - 1) {
        detail = "vertex " + std::to_string(v) + " at position " + std::to_string(i + 1);
        return false;
      }
    } else {
      prefix.insert(v);
    }
  }
  return true;
}

bool max_degree_first(const Graph& g, std::string& detail) {
  if (g.order() == 0) return true;
  const auto all = g.vertices();
  const auto order = max_degree_ordering(g, all).sequence;
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  if (g.degree(order.front()) == best) return true;
  detail = "first vertex " + std::to_string(order.front());
  return false;
}

bool kw_invertibility(const Graph& g, std::string& detail) {
  const auto n = static_cast<std::size_t>(g.order());
  for (const auto mask : independent_set_masks(g)) {
    const auto i = VertexSet::from_mask(n, mask);
    for (int q = 0; q <= static_cast<int>(i.size()); ++q) {
      const auto trace = kw_run(g, i, q);
      long long sum = 0;
      bool ok = kw_reconstruct(g, q, trace.positions, trace.leftover) == i &&
                fingerprint(g, trace.selected, q) == trace.selected;
      for (const auto& step : trace.steps) {
        sum += step.position;
        ok = ok && step.chosen_degree == step.max_degree_trimmed;
        const double a = static_cast<double>(step.live_trimmed);
        const double density = a > 1 ? static_cast<double>(step.edges_trimmed) / (a * (a - 1) / 2) : 0.0;
        ok = ok && static_cast<double>(step.live_after) <=
                       static_cast<double>(step.live_before) - step.position - density * (a - 1) + 1e-9;
      }
      ok = ok && sum <= static_cast<long long>(n - trace.survivors.size());
      if (!ok) {
        detail = "I={" + i.to_string() + "} q=" + std::to_string(q);
        return false;
      }
    }
  }
  return true;
}

// Largest beta with e(U) >= beta binom(|U|, 2) for all |U| >= r, clipped to [0, 1].
double best_beta(const DensityProfile& p, int r) {
  double beta = 1.0;
  for (int k = std::max(r, 2); k <= p.order(); ++k) {
    beta = std::min(beta, static_cast<double>(p.min_edges(k)) / (k * (k - 1) / 2.0));
  }
  return beta * (1.0 - 1e-12);
}

// Largest D with 2 e(U) >= D |U| for all |U| >= r.
double best_average_degree(const DensityProfile& p, int r) {
  double d = INFINITY;
  for (int k = std::max(r, 1); k <= p.order(); ++k) {
    d = std::min(d, 2.0 * static_cast<double>(p.min_edges(k)) / k);
  }
  return d * (1.0 - 1e-12);
}

bool lemma1_count(const Graph& g, std::string& detail) {
  const int n = g.order();
  const DensityProfile profile(g);
  const auto counts = oracle::count_independent_sets(g);
  for (int r = 0; r <= n; ++r) {
    const double beta = best_beta(profile, r);
    if (!profile.satisfies_beta(r, beta)) continue;
    for (int q = 0; q <= counts.max_size(); ++q) {
      if (static_cast<double>(r) < std::exp(-beta * q) * n) continue;
      for (int m = q; m <= counts.max_size(); ++m) {
        if (counts.at(static_cast<std::size_t>(m)) > local_density_count_bound_exact(n, q, r, m)) {
          detail = "q=" + std::to_string(q) + " R=" + std::to_string(r) + " m=" + std::to_string(m);
          return false;
        }
      }
    }
  }
  return true;
}

bool lemma2_containers(const Graph& g, std::string& detail) {
  const int n = g.order();
  const auto sets = independent_set_masks(g);
  const DensityProfile profile(g);
  const int alpha = std::popcount(*std::max_element(sets.begin(), sets.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  }));
  for (int q = 1; q <= std::min(alpha, kContainerMaxQ); ++q) {
    const auto family = enumerate_containers(g, q);
    for (const auto mask : sets) {
      if (std::popcount(mask) < q) continue;
      const auto i = VertexSet::from_mask(static_cast<std::size_t>(n), mask);
      const auto s = fingerprint(g, i, q);
      const auto* entry = family.find(s);
      if (entry == nullptr || !s.is_subset_of(i) || !i.is_subset_of(entry->container | s)) {
        detail = "I={" + i.to_string() + "} q=" + std::to_string(q);
        return false;
      }
    }
    for (int r = 0; r <= n; ++r) {
      const double d = best_average_degree(profile, r);
      if (!(r + q * d >= n) || !profile.satisfies_average_degree(r, d)) continue;
      if (family.max_container_size() > static_cast<std::size_t>(r)) {
        detail = "container above R=" + std::to_string(r) + " at q=" + std::to_string(q);
        return false;
      }
    }
  }
  return true;
}

bool kahn_zhao(const Graph& g, std::string& detail, int offset) {
  const int d = *g.regular_degree();
  const auto total = oracle::count_independent_sets(g).total();
  if (bounds::kahn_zhao_dominates(total, g.order(), d, offset)) return true;
  detail = "i(G)=" + total.str() + " d=" + std::to_string(d);
  return false;
}

bool hoffman(const Graph& g, std::string& detail) {
  const auto p = spectral::profile(g);
  const int alpha = oracle::independence_number(g);
  const double bound = spectral::hoffman_bound(p.n, p.d, p.lambda_min);
  if (alpha <= bound + spectral::kSlack) return true;
  detail = "alpha=" + std::to_string(alpha) + " bound=" + format_real(bound);
  return false;
}

bool alon_chung(const Graph& g, std::string& detail) {
  const auto report = spectral::alon_chung_exhaustive(g);
  if (report.holds()) return true;
  detail = "slack " + format_real(report.worst_slack) + " at mask " + std::to_string(report.witness);
  return false;
}

bool eigen_sanity(const Graph& g, std::string& detail) {
  const auto spectrum = spectral::adjacency_spectrum(g);
  double sum = 0.0;
  double squares = 0.0;
  for (double x : spectrum) {
    sum += x;
    squares += x * x;
  }
  if (std::abs(sum) <= 1e-6 && std::abs(squares - 2.0 * static_cast<double>(g.edge_count())) <= 1e-6) return true;
  detail = "trace " + format_real(sum) + " trace of square " + format_real(squares);
  return false;
}

bool c4_witness(const Graph& g, std::string& detail) {
  const auto h = c4::square_graph(g).square;
  for (const auto& [x, y] : h.edges()) {
    if (c4::witness_count(g, x, y) != 1) {
      detail = "edge " + std::to_string(x) + "-" + std::to_string(y);
      return false;
    }
  }
  return true;
}

bool c4_extensions(const Graph& g, std::string& detail) {
  const int n = g.order();
  const auto profile = c4::c4_extension_profile(g);
  std::vector<BigInt> direct(static_cast<std::size_t>(n) + 1, 0);
  auto adj = g.adjacency_masks();
  adj.push_back(0);
  for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << n); ++nb) {
    adj.back() = nb;
    for (int v = 0; v < n; ++v) {
      adj[static_cast<std::size_t>(v)] = (adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << n)) |
                                          (((nb >> v) & 1U) << n);
    }
    if (!oracle::has_c4(adj)) direct[static_cast<std::size_t>(std::popcount(nb))] += 1;
  }
  for (int d = 0; d <= n; ++d) {
    if (profile.at(static_cast<std::size_t>(d)) != direct[static_cast<std::size_t>(d)]) {
      detail = "d=" + std::to_string(d);
      return false;
    }
  }
  return true;
}

bool eh_identity(const Graph& g, std::string& detail) {
  const auto n = static_cast<std::size_t>(g.order());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!c4::eh_identity_check(g, VertexSet::from_mask(n, mask))) {
      detail = "B mask " + std::to_string(mask);
      return false;
    }
  }
  return true;
}

struct Entry {
  std::string name;
  std::function<bool(const Graph&)> applies;
  Check run;
};

bool regular_with_edges(const Graph& g) {
  const auto d = g.regular_degree();
  return d.has_value() && *d >= 1;
}

}  // namespace

std::vector<std::uint64_t> independent_set_masks(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw ResourceError("independent_set_masks: n = " + std::to_string(n) + " exceeds cap 24");
  const auto adj = g.adjacency_masks();
  std::vector<std::uint64_t> out;
  std::function<void(int, std::uint64_t, std::uint64_t)> walk = [&](int v, std::uint64_t set, std::uint64_t blocked) {
    if (v == n) {
      out.push_back(set);
      return;
    }
    walk(v + 1, set, blocked);
    if (((blocked >> v) & 1U) == 0) walk(v + 1, set | (std::uint64_t{1} << v), blocked | adj[static_cast<std::size_t>(v)]);
  };
  walk(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CheckRow> verify_suite(std::span<const families::NamedGraph> catalog, const VerifyOptions& options) {
  const auto small = [](int cap) { return [cap](const Graph& g) { return g.order() <= cap; }; };
  const auto c4_free_upto = [](int cap) {
    return [cap](const Graph& g) { return g.order() <= cap && !oracle::has_c4(g); };
  };
  const std::vector<Entry> entries = {
      {"oracle-agreement", small(oracle::kExhaustiveCap), oracle_agreement},
      {"sandwich", small(oracle::kIndependentSetCap), sandwich},
      {"max-degree-ordering", [](const Graph&) { return true; }, max_degree_first},
      {"min-degree-ordering", [](const Graph&) { return true; }, min_degree_property},
      {"kw-invertibility", small(kKwCap), kw_invertibility},
      {"local-density-count", small(kContainerCap), lemma1_count},
      {"containers", [](const Graph& g) { return g.order() >= 1 && g.order() <= kContainerCap; }, lemma2_containers},
      {"kahn-zhao",
       [](const Graph& g) { return regular_with_edges(g) && g.order() <= oracle::kIndependentSetCap; },
       [offset = options.kahn_zhao_offset](const Graph& g, std::string& d) { return kahn_zhao(g, d, offset); }},
      {"hoffman", [](const Graph& g) { return regular_with_edges(g) && g.order() <= spectral::kEigenCap; }, hoffman},
      {"alon-chung",
       [](const Graph& g) { return g.regular_degree().has_value() && g.order() >= 1 && g.order() <= spectral::kAlonChungExhaustiveCap; },
       alon_chung},
      {"eigenvalue-sanity", [](const Graph& g) { return g.order() >= 1 && g.order() <= spectral::kEigenCap; }, eigen_sanity},
      {"c4-witness", c4_free_upto(kC4WitnessCap), c4_witness},
      {"c4-extensions", c4_free_upto(kC4SubsetCap), c4_extensions},
      {"eh-identity", c4_free_upto(kC4SubsetCap), eh_identity},
  };

  std::vector<CheckRow> rows;
  for (const auto& entry : entries) {
    CheckRow row{entry.name, 0, 0, {}};
    for (const auto& [name, graph] : catalog) {
      if (!entry.applies(graph)) continue;
      ++row.instances;
      std::string detail;
      if (!entry.run(graph, detail)) {
        if (row.failures++ == 0) row.witness = detail.empty() ? name : name + " " + detail;
      }
    }
    if (row.instances > 0) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kwc

#include <doctest.h>

#include <cmath>
#include <random>

#include "kwc/arithmetic.hpp"
#include "kwc/errors.hpp"
#include "kwc/graph_families.hpp"
#include "kwc/oracle.hpp"
#include "support/reference.hpp"

using namespace kwc;
using arith::ReductionCheck;

namespace {

std::vector<int> range(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i + 1;
  return r;
}

}  // namespace

TEST_CASE("G_S construction") {
  CHECK(arith::build_gs_graph(5, std::vector<int>{1}) == families::cycle(5));
  CHECK(arith::build_gs_graph(4, std::vector<int>{1}) == families::cycle(4));
  const auto two_triangles = arith::build_gs_graph(6, std::vector<int>{2});
  // integers 1,3,5 sit at indices 0,2,4
  CHECK(two_triangles.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {3, 5}});
  CHECK_THROWS_AS(arith::build_gs_graph(6, std::vector<int>{3}), PreconditionError);
  CHECK_THROWS_AS(arith::build_gs_graph(6, std::vector<int>{0}), PreconditionError);
  CHECK_THROWS_AS(arith::build_gs_graph(6, std::vector<int>{}), PreconditionError);

  for (int n = 3; n <= 24; ++n) {
    const int limit = (n + 1) / 2 - 1;
    for (std::uint32_t mask = 1; mask < (1U << limit); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < limit; ++b)
        if ((mask >> b) & 1U) s.push_back(b + 1);
      const auto inst = arith::make_sum_free_instance(n, s);
      CHECK(inst.graph.regular_degree() == 2 * static_cast<int>(s.size()));
    }
  }
}

TEST_CASE("sum-free reduction") {
  CHECK(arith::sum_free_independence_check(std::vector<int>{11, 13, 15, 17, 19}, 20, 2) == ReductionCheck::not_applicable);
  CHECK(arith::sum_free_independence_check(std::vector<int>{3, 4, 9, 10}, 20, 2) == ReductionCheck::holds);
  CHECK(arith::sum_free_independence_check(std::vector<int>{3, 4, 9, 10}, 20, 4) == ReductionCheck::holds);
  CHECK(arith::sum_free_independence_check(std::vector<int>{3, 4, 9, 10}, 20, 3) == ReductionCheck::holds);
  CHECK(arith::sum_free_independence_check(std::vector<int>{3, 4, 10, 11}, 20, 3) == ReductionCheck::not_applicable);
  CHECK(arith::sum_free_independence_check(std::vector<int>{3, 4, 9, 10}, 20, 0) == ReductionCheck::holds);
  CHECK_THROWS_AS(arith::sum_free_independence_check(std::vector<int>{1, 2}, 20, 1), PreconditionError);
  CHECK_THROWS_AS(arith::sum_free_independence_check(std::vector<int>{3, 4}, 20, 3), PreconditionError);

  for (int n = 4; n <= 14; ++n) {
    for (const auto& a : oracle::list_sum_free(n)) {
      for (int t = 0; t <= static_cast<int>(a.size()); ++t) {
        CHECK(arith::sum_free_independence_check(a, n, t) != ReductionCheck::violated);
      }
    }
  }
}

TEST_CASE("sum-free count bound") {
  for (long long n : {8LL, 100LL, 1000LL, 1000000LL}) CHECK(arith::sum_free_count_bound(n, 10).log2_value >= n / 2.0);
  const long long n = 1000;
  const double small = std::cbrt(1e6);
  const double first = small * std::log2(500.0) + 501.0;
  const double second =
      bounds::log2_binomial(500, 100) + bounds::sapozhenko_bound(1000, 200, 10).log2_value;
  CHECK(arith::sum_free_count_bound(n, 10).log2_value == doctest::Approx(bounds::log2_add(first, second)));

  double previous = INFINITY;
  for (double x : {1e3, 1e6, 1e9, 1e12}) {
    const double ratio = arith::sum_free_count_bound(static_cast<long long>(x), 10).log2_value / x;
    CHECK(ratio < previous);
    previous = ratio;
  }
  CHECK(previous < 0.51);
  for (int k = 8; k <= 20; ++k) {
    CHECK(log2_big(oracle::count_sum_free(k).total()) <= arith::sum_free_count_bound(k, 10).log2_value);
  }
  CHECK_THROWS_AS(arith::sum_free_count_bound(7, 1), PreconditionError);
}

TEST_CASE("3-AP hypergraph") {
  CHECK(arith::build_3ap_hypergraph(5).triples.size() == 4);
  CHECK(arith::build_3ap_hypergraph(3).triples == std::vector<arith::Triple>{{1, 2, 3}});
  CHECK(arith::build_3ap_hypergraph(2).triples.empty());
  for (int n = 1; n <= 100; ++n) {
    const auto ap = arith::build_3ap_hypergraph(n);
    std::size_t expect = 0;
    for (int d = 1; n - 2 * d > 0; ++d) expect += static_cast<std::size_t>(n - 2 * d);
    CHECK(ap.triples.size() == expect);
    for (int x = 1; x <= n; ++x) CHECK(ap.degree(x) <= 2 * n);
  }
}

TEST_CASE("G_W graph") {
  const auto ap = arith::build_3ap_hypergraph(5);
  const auto gw = arith::build_gw_graph(range(5), std::vector<int>{3}, ap);
  CHECK(gw.labels == range(5));
  // integer x sits at index x - 1
  CHECK(gw.graph.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 3}, {3, 4}});
  CHECK(arith::build_gw_graph(range(5), std::vector<int>{}, ap).graph.edge_count() == 0);
  CHECK_THROWS_AS(arith::build_gw_graph(std::vector<int>{1, 2}, std::vector<int>{3}, ap), PreconditionError);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 28);
    const auto full = arith::build_3ap_hypergraph(n);
    std::vector<int> b, w;
    for (int x = 1; x <= n; ++x) {
      if (rng() % 2 == 0) continue;
      b.push_back(x);
      if (rng() % 3 == 0) w.push_back(x);
    }
    const auto g = arith::build_gw_graph(b, w, full);
    int max_degree = 0;
    for (Vertex v = 0; v < g.graph.order(); ++v) max_degree = std::max(max_degree, g.graph.degree(v));
    CHECK(max_degree <= 3 * static_cast<int>(w.size()));
    for (const auto& [x, y] : g.graph.edges()) {
      const int count = g.witnesses(x, y, w);
      CHECK(count >= 1);
      CHECK(count <= 3);
    }
    std::vector<bool> in_b(static_cast<std::size_t>(n) + 1, false);
    for (int x : b) in_b[static_cast<std::size_t>(x)] = true;
    long long degree_sum = 0;
    for (int z : w) degree_sum += full.degree_within(z, in_b);
    CHECK(3 * static_cast<long long>(g.graph.edge_count()) >= degree_sum);
  }
}

TEST_CASE("heavy elements") {
  const auto ap = arith::build_3ap_hypergraph(9);
  const auto all = range(9);
  std::vector<int> expect;
  std::vector<bool> in(10, true);
  for (int x : all)
    if (ap.degree_within(x, in) >= 0.3 * 9) expect.push_back(x);
  CHECK(arith::heavy_elements(all, 0.3, ap) == expect);
  CHECK(arith::heavy_elements(all, 0.0, ap) == all);
  CHECK(arith::heavy_elements(all, 10.0, ap).empty());
}

TEST_CASE("delta-Roth sets") {
  CHECK(arith::is_delta_roth(range(5), 0.9));
  CHECK_FALSE(arith::is_delta_roth(range(5), 0.8));
  CHECK_FALSE(arith::is_delta_roth(std::vector<int>{}, 0.5));
  CHECK(arith::roth_threshold(10, 0.7) == 7);
  CHECK(arith::roth_threshold(5, 0.9) == 5);
  CHECK_THROWS_AS(arith::is_delta_roth(range(41), 0.5), ResourceError);
}

TEST_CASE("random subsets") {
  const auto a = arith::sample_subset(36, 12, 99);
  CHECK(a == arith::sample_subset(36, 12, 99));
  CHECK(a.size() == 12);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a.front() >= 1);
  CHECK(a.back() <= 36);
  CHECK(arith::sample_subset(10, 10, 5) == range(10));
  CHECK_THROWS_AS(arith::sample_subset(5, 6, 1), PreconditionError);

  // each element should be picked about m/n of the time
  std::vector<int> hits(21, 0);
  for (std::uint64_t s = 0; s < 20000; ++s)
    for (int x : arith::sample_subset(20, 5, s)) ++hits[static_cast<std::size_t>(x)];
  for (int x = 1; x <= 20; ++x) CHECK(std::abs(hits[static_cast<std::size_t>(x)] - 5000) < 400);
}

TEST_CASE("Roth experiment") {
  for (double delta : {0.5, 0.8, 0.9}) {
    const auto r = arith::roth_random_experiment(12, 12, delta, 5, 3);
    CHECK(r.successes == (arith::is_delta_roth(range(12), delta) ? 5U : 0U));
  }
  CHECK_THROWS_AS(arith::roth_random_experiment(12, 6, 0.5, 0, 3), PreconditionError);
  CHECK_THROWS_AS(arith::roth_random_experiment(12, 13, 0.5, 1, 3), PreconditionError);
  const auto a = arith::roth_random_experiment(30, 10, 0.7, 50, 8);
  const auto b = arith::roth_random_experiment(30, 10, 0.7, 50, 8);
  CHECK(a.successes == b.successes);
  CHECK(a.probability() == doctest::Approx(static_cast<double>(a.successes) / 50));
}

TEST_CASE("AP-free recursion") {
  CHECK(arith::default_recursion_depth(0.5, 0.01) == 900);
  CHECK(arith::ap_free_recursion_bound(100, 20, 0.5, 0.01, 0).log2_value ==
        doctest::Approx(bounds::log2_binomial(25, 20)));
  double previous = -INFINITY;
  for (int k = 0; k <= 3; ++k) {
    const double v = arith::ap_free_recursion_bound(400, 120, 1.0, 0.01, k).log2_value;
    CHECK(v > previous);
    previous = v;
  }
  const double expect = 2.0 * (1.0 + 2.0 * bounds::log2_binomial(100, 10)) + bounds::log2_binomial(25, 20);
  CHECK(arith::ap_free_recursion_bound(100, 60, 0.5, 0.01, 2).log2_value == doctest::Approx(expect));
  CHECK_THROWS_AS(arith::ap_free_recursion_bound(100, 19, 0.5, 0.01, 1), PreconditionError);

  auto s = arith::RothRecursionState::start(100, 60, 0.5, 0.12);
  CHECK(s.w == 10);
  CHECK(s.q == 10);
  s.advance();
  CHECK(s.n_prime == 99);
  CHECK(s.m_remaining == 40);
  CHECK(s.step == 1);
}

TEST_CASE("Varnavides profile") {
  const auto full = arith::varnavides_profile(9, 1.0);
  CHECK(full.min_count == oracle::count_3aps(range(9), 9));
  CHECK(full.beta_estimate == doctest::Approx(static_cast<double>(full.min_count) / 81));

  std::uint64_t best = ~std::uint64_t{0};
  for (int drop = 0; drop <= 9; ++drop) {
    std::vector<int> b;
    for (int x = 1; x <= 9; ++x)
      if (x != drop) b.push_back(x);
    best = std::min(best, oracle::count_3aps(b, 9));
  }
  CHECK(arith::varnavides_profile(9, 8.0 / 9).min_count == best);

  std::uint64_t previous = 0;
  for (int k = 0; k <= 12; ++k) {
    const auto p = arith::varnavides_profile(12, k / 12.0);
    CHECK(p.min_count >= previous);
    previous = p.min_count;
  }
  CHECK_THROWS_AS(arith::varnavides_profile(23, 0.5), ResourceError);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "kwc/errors.hpp"
#include "kwc/graph_families.hpp"
#include "kwc/kw_engine.hpp"
#include "kwc/verify.hpp"
#include "support/reference.hpp"

using namespace kwc;

namespace {

VertexSet vs(int n, std::initializer_list<Vertex> m) { return VertexSet(static_cast<std::size_t>(n), m); }

}  // namespace

TEST_CASE("kw_run hand traces") {
  const auto p3 = families::path(3);
  SUBCASE("P3, q=1") {
    const auto t = kw_run(p3, vs(3, {0, 2}), 1);
    CHECK(t.positions == std::vector<int>{2});
    CHECK(t.selected == vs(3, {0}));
    CHECK(t.survivors == vs(3, {2}));
    CHECK(t.leftover == vs(3, {2}));
    CHECK(format_trace(t) == "1; 2; 0; 2");
  }
  SUBCASE("P3, q=2") {
    const auto t = kw_run(p3, vs(3, {0, 2}), 2);
    CHECK(t.positions == std::vector<int>{2, 1});
    CHECK(t.selected == vs(3, {0, 2}));
    CHECK(t.survivors.empty());
  }
  SUBCASE("empty graph") {
    const auto t = kw_run(families::empty(3), vs(3, {0, 1, 2}), 1);
    CHECK(t.positions == std::vector<int>{1});
    CHECK(t.selected == vs(3, {0}));
    CHECK(t.survivors == vs(3, {1, 2}));
  }
  SUBCASE("q = 0 leaves everything live") {
    const auto t = kw_run(p3, vs(3, {0, 2}), 0);
    CHECK(t.positions.empty());
    CHECK(t.survivors == p3.vertices());
    CHECK(t.leftover == vs(3, {0, 2}));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(kw_run(p3, vs(3, {0, 1}), 1), PreconditionError);
    CHECK_THROWS_AS(kw_run(p3, vs(3, {0, 2}), 3), PreconditionError);
    CHECK_THROWS_AS(kw_run(p3, vs(4, {0}), 1), PreconditionError);
  }
}

TEST_CASE("kw_reconstruct") {
  const auto p3 = families::path(3);
  CHECK(kw_reconstruct(p3, 1, std::vector<int>{2}, vs(3, {2})) == vs(3, {0, 2}));
  CHECK(kw_reconstruct(p3, 0, {}, vs(3, {1})) == vs(3, {1}));
  CHECK_THROWS_AS(kw_reconstruct(p3, 1, std::vector<int>{5}, VertexSet(3)), MalformedTraceError);
  CHECK_THROWS_AS(kw_reconstruct(p3, 1, std::vector<int>{0}, VertexSet(3)), MalformedTraceError);
  CHECK_THROWS_AS(kw_reconstruct(p3, 2, std::vector<int>{1}, VertexSet(3)), MalformedTraceError);
  // leftover outside the final live set cannot come from a real run
  CHECK_THROWS_AS(kw_reconstruct(p3, 1, std::vector<int>{2}, vs(3, {1})), MalformedTraceError);
}

TEST_CASE("fingerprint") {
  const auto p3 = families::path(3);
  CHECK(fingerprint(p3, vs(3, {0, 2}), 1) == vs(3, {0}));
  CHECK(fingerprint(p3, vs(3, {0}), 1) == vs(3, {0}));
  CHECK(fingerprint(families::empty(3), vs(3, {0, 1, 2}), 2) == vs(3, {0, 1}));
  const auto pet = families::petersen();
  const auto i = vs(10, {0, 2, 8});
  REQUIRE(pet.is_independent(i));
  CHECK(fingerprint(pet, i, 3) == i);
}

TEST_CASE("trace text") {
  const auto p = parse_trace("2; 2,1; 0,2; ");
  CHECK(p.q == 2);
  CHECK(p.positions == std::vector<int>{2, 1});
  CHECK(p.selected == std::vector<Vertex>{0, 2});
  CHECK(p.survivors.empty());
  CHECK_THROWS_AS(parse_trace("1; 2; 0"), InputError);
  CHECK_THROWS_AS(parse_trace("1; x; 0; 2"), InputError);
}

TEST_CASE("encoder properties on random graphs") {
  std::mt19937_64 rng(7);
  const double ps[] = {0.1, 0.3, 0.5};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = families::random_gnp(n, ps[trial % 3], rng());
    const auto i = ref::random_maximal_independent(g, rng);
    for (int q = 0; q <= static_cast<int>(i.size()); ++q) {
      CAPTURE(trial);
      CAPTURE(q);
      const auto t = kw_run(g, i, q);
      CHECK(kw_reconstruct(g, q, t.positions, t.leftover) == i);
      CHECK(fingerprint(g, t.selected, q) == t.selected);
      CHECK(t.selected.is_subset_of(i));
      CHECK_FALSE(t.selected.intersects(t.survivors));
      CHECK((i - t.selected).is_subset_of(t.survivors));
      long long sum = 0;
      for (const auto& s : t.steps) {
        sum += s.position;
        CHECK(s.position >= 1);
        CHECK(s.chosen_degree == s.max_degree_trimmed);
        const double a = static_cast<double>(s.live_trimmed);
        const double beta = a > 1 ? static_cast<double>(s.edges_trimmed) / (a * (a - 1) / 2) : 0.0;
        CHECK(static_cast<double>(s.live_after) <= static_cast<double>(s.live_before) - s.position - beta * (a - 1) + 1e-9);
        CHECK(static_cast<double>(s.live_after) <= (1.0 - beta) * static_cast<double>(s.live_before) + 1e-9);
      }
      CHECK(sum <= static_cast<long long>(n) - static_cast<long long>(t.survivors.size()));
    }
  }
}

TEST_CASE("enumerate_containers") {
  SUBCASE("K2") {
    const auto fam = enumerate_containers(families::complete(2), 1);
    REQUIRE(fam.size() == 2);
    CHECK(fam.find(vs(2, {0}))->container.empty());
    CHECK(fam.find(vs(2, {1}))->container.empty());
  }
  SUBCASE("empty graph on two vertices") {
    const auto fam = enumerate_containers(families::empty(2), 1);
    REQUIRE(fam.size() == 2);
    CHECK(fam.find(vs(2, {0}))->container == vs(2, {1}));
    CHECK(fam.find(vs(2, {1}))->container.empty());
    CHECK(total_count_bound(2, 1, fam.container_sizes()).log2_value == doctest::Approx(2.0));
  }
  SUBCASE("q = 0 gives the whole vertex set") {
    const auto fam = enumerate_containers(families::path(4), 0);
    REQUIRE(fam.size() == 1);
    CHECK(fam.entries()[0].container == families::path(4).vertices());
  }
  SUBCASE("node cap") {
    try {
      enumerate_containers(families::empty(12), 4, 100);
      FAIL("expected a resource error");
    } catch (const ResourceError& e) {
      CHECK(e.partial().has_value());
    }
  }
  SUBCASE("covering on the catalog") {
    for (const auto& [name, g] : families::builtin_catalog()) {
      if (g.order() > 9) continue;
      const auto sets = independent_set_masks(g);
      for (int q = 1; q <= 3; ++q) {
        const auto fam = enumerate_containers(g, q);
        CAPTURE(name);
        CAPTURE(q);
        if (q == 1) CHECK(fam.size() <= static_cast<std::size_t>(g.order()));
        for (const auto& e : fam.entries()) {
          CHECK(e.fingerprint.size() == static_cast<std::size_t>(q));
          CHECK(g.is_independent(e.fingerprint));
          CHECK_FALSE(e.fingerprint.intersects(e.container));
        }
        for (auto mask : sets) {
          const auto i = VertexSet::from_mask(static_cast<std::size_t>(g.order()), mask);
          if (static_cast<int>(i.size()) < q) continue;
          const auto s = fingerprint(g, i, q);
          const auto* e = fam.find(s);
          REQUIRE(e != nullptr);
          CHECK(i.is_subset_of(e->container | s));
        }
      }
    }
  }
}

TEST_CASE("local density count bound") {
  CHECK(local_density_count_bound(10, 2, 5, 4).log2_value == doctest::Approx(std::log2(450.0)));
  CHECK(local_density_count_bound(10, 3, 7.5, 3).log2_value == doctest::Approx(std::log2(120.0)));
  CHECK(local_density_count_bound(10, 2, 3, 9).is_zero());
  CHECK(local_density_count_bound_exact(10, 2, 5.9, 4) == 450);
  CHECK_THROWS_AS(local_density_count_bound(10, 3, 5, 2), PreconditionError);
}

TEST_CASE("density verifiers") {
  const auto k4 = families::complete(4);
  CHECK(verify_density_beta(k4, 2, 1.0));
  CHECK_FALSE(verify_density_beta(families::empty(4), 2, 0.1));
  CHECK(verify_density_beta(families::cycle(4), 3, 1.0 / 3));
  CHECK(verify_density_D(k4, 2, 1.0));
  CHECK_FALSE(verify_density_D(k4, 2, 1.01));
  CHECK_FALSE(verify_density_D(families::empty(5), 3, 0.5));
  const auto pet = families::petersen();
  CHECK(verify_density_D(pet, 10, 3.0));
  CHECK_THROWS_AS(verify_density_beta(families::empty(21), 2, 0.1), ResourceError);

  SUBCASE("agrees with a direct subset scan") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto g = families::random_gnp(n, 0.5, rng());
      const auto adj = ref::masks(g);
      const double r = static_cast<double>(rng() % static_cast<unsigned>(n + 1));
      const double beta = static_cast<double>(rng() % 11) / 10.0;
      bool expect = true;
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const int k = std::popcount(u);
        if (k < r) continue;
        int e = 0;
        for (int v = 0; v < n; ++v)
          if ((u >> v) & 1U) e += std::popcount(adj[static_cast<std::size_t>(v)] & u);
        e /= 2;
        if (e + 1e-9 < beta * k * (k - 1) / 2.0) expect = false;
      }
      CHECK(verify_density_beta(g, r, beta) == expect);
    }
  }
}

TEST_CASE("total_count_bound") {
  CHECK(total_count_bound(2, 1, std::vector<std::size_t>{1, 0}).log2_value == doctest::Approx(2.0));
  CHECK(total_count_bound(9, 0, std::vector<std::size_t>{5}).log2_value == doctest::Approx(5.0));
  CHECK(total_count_bound(4, 1, std::vector<std::size_t>{}).log2_value == doctest::Approx(0.0));
}

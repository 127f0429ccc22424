#include <doctest.h>

#include <cmath>

#include "kwc/bounds.hpp"
#include "kwc/errors.hpp"
#include "kwc/graph_families.hpp"
#include "kwc/oracle.hpp"
#include "support/reference.hpp"

using namespace kwc;
using bounds::log2_binomial;

TEST_CASE("log2_binomial") {
  CHECK(log2_binomial(10, 2) == doctest::Approx(std::log2(45.0)));
  CHECK(log2_binomial(7.3, 0) == 0.0);
  CHECK(log2_binomial(5.5, 2) == doctest::Approx(std::log2(5.5 * 4.5 / 2)));
  CHECK(log2_binomial(3, 4) == -INFINITY);
  CHECK_THROWS_AS(log2_binomial(3, -1), PreconditionError);
  for (int a = 0; a <= 60; ++a) {
    for (int b = 0; b <= a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(std::abs(log2_binomial(a, b) - log2_big(ref::binom(a, b))) <= 1e-9);
    }
  }
}

TEST_CASE("BigInt helpers") {
  CHECK(binomial(60, 30) == ref::binom(60, 30));
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(pow_big(3, 4) == 81);
  CHECK(log2_big(BigInt(1) << 2000) == doctest::Approx(2000.0));
  CHECK(log2_big(0) == -INFINITY);
  CHECK(bounds::log2_add(3.0, 3.0) == doctest::Approx(4.0));
  CHECK(bounds::log2_add(-INFINITY, 5.0) == 5.0);
  CHECK(bounds::log2_add(2000.0, 0.0) == doctest::Approx(2000.0));
}

TEST_CASE("sandwich") {
  auto s = bounds::sandwich_bounds(7, 7);
  CHECK(s.lower == 7.0);
  CHECK(s.upper == doctest::Approx(7.0));
  s = bounds::sandwich_bounds(0, 5);
  CHECK(s.lower == 0.0);
  CHECK(s.upper == 0.0);
  s = bounds::sandwich_bounds(2, 4);
  CHECK(s.lower == 2.0);
  CHECK(s.upper == doctest::Approx(std::log2(11.0)));
  CHECK_THROWS_AS(bounds::sandwich_bounds(5, 4), PreconditionError);

  for (const auto& [name, g] : families::builtin_catalog()) {
    const auto t = oracle::count_independent_sets(g);
    const auto sw = bounds::sandwich_bounds(t.max_size(), g.order());
    CAPTURE(name);
    CHECK(sw.lower <= log2_big(t.total()) + 1e-12);
    CHECK(log2_big(t.total()) <= sw.upper + 1e-12);
  }
}

TEST_CASE("sapozhenko") {
  CHECK(bounds::sapozhenko_bound(100, 5, 0.0).log2_value == doctest::Approx(50.0));
  CHECK(bounds::sapozhenko_bound(100, 16, 1.0).log2_value ==
        doctest::Approx(50.0 * (1.0 + std::sqrt(std::log(16.0) / 16.0))));
  for (int d = 3; d < 200; ++d) {
    CHECK(bounds::sapozhenko_bound(100, d + 1, 2.0).log2_value < bounds::sapozhenko_bound(100, d, 2.0).log2_value);
  }
  CHECK_THROWS_AS(bounds::sapozhenko_bound(10, 1, 1.0), PreconditionError);
  CHECK(bounds::sapozhenko_bound(10, 2, 1.0).provenance == "sapozhenko");
}

TEST_CASE("kahn-zhao") {
  for (int d = 1; d <= 8; ++d) {
    const double expect = std::log2(std::pow(2.0, d + 1) - 1);
    CHECK(bounds::kahn_zhao_bound(2 * d, d).log2_value == doctest::Approx(expect));
  }
  CHECK(bounds::kahn_zhao_bound(2, 1).log2_value == doctest::Approx(std::log2(3.0)));
  const auto pet = bounds::kahn_zhao_bound(10, 3);
  CHECK(pet.log2_value == doctest::Approx(6.512).epsilon(1e-3));
  CHECK(pet.log2_value >= log2_big(oracle::count_independent_sets(families::petersen()).total()));
  CHECK(bounds::kahn_zhao_dominates(7, 4, 2));
  CHECK_FALSE(bounds::kahn_zhao_dominates(8, 4, 2));
  CHECK_FALSE(bounds::kahn_zhao_dominates(7, 4, 2, -2));
  CHECK_THROWS_AS(bounds::kahn_zhao_bound(4, 0), PreconditionError);
}

TEST_CASE("C4 bound against exact counts") {
  CHECK(bounds::kw_c4_bound(4, 1.0).log2_value == doctest::Approx(8.0));
  const int ex[] = {0, 0, 1, 3, 4, 6, 7};
  for (int n = 1; n <= 6; ++n) {
    const auto census = oracle::c4_free_census(n);
    const double lf = log2_big(census.count);
    CHECK(lf <= bounds::kw_c4_bound(n, 2.0).log2_value);
    CHECK(census.max_edges == ex[n]);
    CHECK(static_cast<double>(census.max_edges) <= lf);
  }
}

TEST_CASE("AP-free count bound") {
  CHECK(bounds::ap_free_count_bound(30, 0, 0.3).log2_value == 0.0);
  CHECK(bounds::ap_free_count_bound(20, 4, 0.5).log2_value == doctest::Approx(std::log2(210.0)));
  CHECK_THROWS_AS(bounds::ap_free_count_bound(20, 4, 0.0), PreconditionError);
  CHECK_THROWS_AS(bounds::ap_free_count_bound(20, 4, 1.5), PreconditionError);
  for (int n = 3; n <= 20; ++n) {
    const auto t = oracle::count_3ap_free(n);
    for (int m = 0; m <= n; ++m) {
      CHECK(log2_big(t.at(static_cast<std::size_t>(m))) <= bounds::ap_free_count_bound(n, m, 1.0).log2_value + 1e-9);
    }
  }
  for (int k = 1; k < 10; ++k) {
    CHECK(bounds::ap_free_count_bound(100, 8, 0.1 * k).log2_value <
          bounds::ap_free_count_bound(100, 8, 0.1 * (k + 1)).log2_value);
  }
}

TEST_CASE("random Roth failure bound") {
  const auto fb = bounds::random_roth_failure_bound(100, 50, 0.6);
  CHECK(fb.simplified.log2_value == -30.0);
  for (long long n : {50, 100, 400}) {
    for (long long m = 1; m <= n; m += 7) {
      for (double delta : {0.1, 0.5, 0.7, 0.9}) {
        const auto b = bounds::random_roth_failure_bound(n, m, delta);
        CHECK(b.simplified.log2_value == -delta * static_cast<double>(m));
        const auto k = static_cast<long long>(std::ceil(delta * static_cast<double>(m)));
        const double eps = delta / 6;
        const double expect = log2_binomial(eps * n, k) + k * std::log2(static_cast<double>(m) / n);
        if (std::isinf(expect)) {
          CHECK(b.chain.is_zero());
        } else {
          CHECK(b.chain.log2_value == doctest::Approx(expect));
        }
        if (eps * std::exp(1.0) * n / k * m / n <= 0.5) CHECK(b.chain.log2_value <= b.simplified.log2_value + 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(bounds::random_roth_failure_bound(10, 11, 0.5), PreconditionError);
}

TEST_CASE("LogBound helpers") {
  LogBound b{-INFINITY, "x", {{"n", 3.0}, {"eps", 0.25}}};
  CHECK(b.is_zero());
  CHECK_FALSE(b.is_vacuous());
  CHECK(b.params_string() == "n=3 eps=0.25");
  CHECK(format_real(1.0 / 3) == "0.333333333333");
  CHECK(format_real(INFINITY) == "inf");
  CHECK(format_real(-INFINITY) == "-inf");
}

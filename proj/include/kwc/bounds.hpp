#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kwc/bigint.hpp"

namespace kwc {

/// A bound on some count, carried as its base-2 logarithm.
///
/// -inf means the bound is 0 (nothing can exist); +inf means the formula
/// gives no information for these parameters.
struct LogBound {
  double log2_value = 0.0;
  std::string provenance;
  std::vector<std::pair<std::string, double>> params;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_vacuous() const;
  /// "name=value" pairs joined by spaces, values at 12 significant digits.
  [[nodiscard]] std::string params_string() const;
};

/// Prints a double with 12 significant digits ("inf"/"-inf" for infinities).
std::string format_real(double x);

}  // namespace kwc

namespace kwc::bounds {

/// log2 of the generalised binomial Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1));
/// -inf when a < b.
double log2_binomial(double a, long long b);
/// log2(2^x + 2^y) without overflow.
double log2_add(double x, double y);

struct Sandwich {
  double lower;
  double upper;
};
/// 2^alpha <= i(G) <= sum_{m <= alpha} binom(n, m), both in log2.
Sandwich sandwich_bounds(int alpha, int n);

/// (1 + C sqrt(ln d / d)) n / 2 for d-regular graphs, d >= 2.
LogBound sapozhenko_bound(long long n, long long d, double c);

/// (n / 2d) log2(2^{d+1} - 1).
LogBound kahn_zhao_bound(long long n, int d);
/// Exact test of count^{2d} <= (2^{d+1} - 1)^n. `base_offset` replaces the
/// "-1" in the base and exists only for fault injection.
bool kahn_zhao_dominates(const BigInt& count, int n, int d, int base_offset = -1);

/// C n^{3/2}.
LogBound kw_c4_bound(long long n, double c);

/// log2 binom(epsilon n, m).
LogBound ap_free_count_bound(long long n, long long m, double epsilon);

struct FailureBound {
  LogBound chain;       // log2 binom(eps n, k) (m/n)^k with k = ceil(delta m)
  LogBound simplified;  // -delta m
};
/// Probability that a random m-subset of [n] is not delta-Roth. epsilon
/// defaults to delta / 6 when passed as a non-positive value.
FailureBound random_roth_failure_bound(long long n, long long m, double delta, double epsilon = 0.0);

}  // namespace kwc::bounds

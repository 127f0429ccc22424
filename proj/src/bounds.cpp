#include "kwc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "kwc/errors.hpp"

namespace kwc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool LogBound::is_zero() const { return std::isinf(log2_value) && log2_value < 0; }
bool LogBound::is_vacuous() const { return std::isinf(log2_value) && log2_value > 0; }

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string LogBound::params_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + format_real(v);
  }
  return out;
}

}  // namespace kwc

namespace kwc::bounds {

double log2_binomial(double a, long long b) {
  if (b < 0) throw PreconditionError("log2_binomial: negative lower argument");
  const auto bd = static_cast<double>(b);
  if (a < bd) return -kInf;
  if (b == 0) return 0.0;
  const double nat = std::lgamma(a + 1.0) - std::lgamma(bd + 1.0) - std::lgamma(a - bd + 1.0);
  return nat / std::numbers::ln2;
}

double log2_add(double x, double y) {
  if (x < y) std::swap(x, y);
  if (std::isinf(y) && y < 0) return x;
  return x + std::log2(1.0 + std::exp2(y - x));
}

Sandwich sandwich_bounds(int alpha, int n) {
  if (alpha < 0 || alpha > n) throw PreconditionError("sandwich_bounds: need 0 <= alpha <= n");
  BigInt sum = 0;
  for (int m = 0; m <= alpha; ++m) sum += binomial(n, m);
  return {static_cast<double>(alpha), log2_big(sum)};
}

LogBound sapozhenko_bound(long long n, long long d, double c) {
  if (d < 2) throw PreconditionError("sapozhenko_bound: d must be at least 2");
  const auto dd = static_cast<double>(d);
  const double value = (1.0 + c * std::sqrt(std::log(dd) / dd)) * static_cast<double>(n) / 2.0;
  return {value, "sapozhenko", {{"n", static_cast<double>(n)}, {"d", dd}, {"C", c}}};
}

LogBound kahn_zhao_bound(long long n, int d) {
  if (d < 1) throw PreconditionError("kahn_zhao_bound: d must be at least 1");
  // log2(2^{d+1} - 1) = (d+1) + log2(1 - 2^{-(d+1)})
  const double base = static_cast<double>(d + 1) + std::log2(1.0 - std::exp2(-(d + 1.0)));
  const double value = static_cast<double>(n) / (2.0 * d) * base;
  return {value, "kahn-zhao", {{"n", static_cast<double>(n)}, {"d", static_cast<double>(d)}}};
}

bool kahn_zhao_dominates(const BigInt& count, int n, int d, int base_offset) {
  if (d < 1 || n < 0) throw PreconditionError("kahn_zhao_dominates: need d >= 1, n >= 0");
  const BigInt base = (BigInt(1) << (d + 1)) + base_offset;
  return pow_big(count, 2 * static_cast<std::uint64_t>(d)) <= pow_big(base, static_cast<std::uint64_t>(n));
}

LogBound kw_c4_bound(long long n, double c) {
  const double value = c * std::pow(static_cast<double>(n), 1.5);
  return {value, "kleitman-winston-c4", {{"n", static_cast<double>(n)}, {"C", c}}};
}

LogBound ap_free_count_bound(long long n, long long m, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw PreconditionError("ap_free_count_bound: epsilon must lie in (0, 1]");
  if (m < 0) throw PreconditionError("ap_free_count_bound: m must be non-negative");
  const double value = log2_binomial(epsilon * static_cast<double>(n), m);
  return {value, "ap-free-count", {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}, {"epsilon", epsilon}}};
}

FailureBound random_roth_failure_bound(long long n, long long m, double delta, double epsilon) {
  if (n <= 0 || m < 0 || m > n) throw PreconditionError("random_roth_failure_bound: need 0 <= m <= n, n > 0");
  if (!(delta > 0.0)) throw PreconditionError("random_roth_failure_bound: delta must be positive");
  if (!(epsilon > 0.0)) epsilon = delta / 6.0;
  const auto k = static_cast<long long>(std::ceil(delta * static_cast<double>(m)));
  const double ratio = static_cast<double>(m) / static_cast<double>(n);
  double chain = log2_binomial(epsilon * static_cast<double>(n), k);
  if (k > 0) chain += static_cast<double>(k) * std::log2(ratio);
  std::vector<std::pair<std::string, double>> params{{"n", static_cast<double>(n)},
                                                     {"m", static_cast<double>(m)},
                                                     {"delta", delta},
                                                     {"epsilon", epsilon}};
  return {{chain, "random-roth-failure-chain", params},
          {-delta * static_cast<double>(m), "random-roth-failure", params}};
}

}  // namespace kwc::bounds

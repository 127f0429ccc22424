#include "kwc/bigint.hpp"

#include <cmath>
#include <limits>

namespace kwc {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

double log2_big(const BigInt& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  const auto top = boost::multiprecision::msb(x);
  if (top < 60) return std::log2(x.convert_to<double>());
  const auto shift = top - 60;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace kwc

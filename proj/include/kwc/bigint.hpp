#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kwc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt pow_big(const BigInt& base, std::uint64_t exp);
/// log2 of a non-negative integer; -inf for zero.
double log2_big(const BigInt& x);
std::string to_string(const BigInt& x);

}  // namespace kwc

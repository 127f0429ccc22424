#pragma once

#include <cstdint>
#include <vector>

#include "kwc/bounds.hpp"
#include "kwc/graph.hpp"

namespace kwc::spectral {

inline constexpr int kEigenCap = 64;
inline constexpr int kAlonChungExhaustiveCap = 14;
inline constexpr double kSlack = 1e-6;

struct SpectralProfile {
  int n = 0;
  int d = 0;
  double lambda_min = 0.0;
};

/// All adjacency eigenvalues, ascending. Order at most kEigenCap.
std::vector<double> adjacency_spectrum(const Graph& g);

/// Smallest adjacency eigenvalue of a regular graph.
double smallest_eigenvalue(const Graph& g);
SpectralProfile profile(const Graph& g);

/// 2 e(A) - (d/n)|A|^2 - (lambda/n)|A|(n - |A|), with lambda the smallest eigenvalue.
double alon_chung_slack(const Graph& g, const VertexSet& a, const SpectralProfile& p);
bool alon_chung_check(const Graph& g, const VertexSet& a);

struct AlonChungReport {
  double worst_slack = 0.0;
  std::uint64_t witness = 0;  // subset mask attaining the worst slack
  std::uint64_t subsets = 0;
  [[nodiscard]] bool holds() const { return worst_slack >= -kSlack; }
};
/// Checks every subset of a regular graph on at most kAlonChungExhaustiveCap vertices.
AlonChungReport alon_chung_exhaustive(const Graph& g);

/// -lambda n / (d - lambda), lambda the smallest eigenvalue (a non-positive number).
double hoffman_bound(long long n, int d, double lambda);

/// log2 binom((lambda / (d + lambda) + epsilon) n, m) where -lambda bounds the
/// smallest eigenvalue from below (lambda >= 0). Returns a vacuous (+inf)
/// bound when the ratio reaches 1.
LogBound eigenvalue_count_bound(long long n, int d, double lambda, double epsilon, long long m);

}  // namespace kwc::spectral

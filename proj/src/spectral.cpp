#include "kwc/spectral.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "kwc/errors.hpp"

namespace kwc::spectral {

namespace {

int require_regular(const Graph& g, const char* what) {
  const auto d = g.regular_degree();
  if (!d) throw PreconditionError(std::string(what) + ": graph is not regular");
  return *d;
}

}  // namespace

std::vector<double> adjacency_spectrum(const Graph& g) {
  const int n = g.order();
  if (n > kEigenCap) {
    throw ResourceError("adjacency_spectrum: n = " + std::to_string(n) + " exceeds cap " + std::to_string(kEigenCap));
  }
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("adjacency_spectrum: eigen-decomposition failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double smallest_eigenvalue(const Graph& g) {
  require_regular(g, "smallest_eigenvalue");
  const auto spectrum = adjacency_spectrum(g);
  return spectrum.empty() ? 0.0 : spectrum.front();
}

SpectralProfile profile(const Graph& g) {
  const int d = require_regular(g, "spectral profile");
  return {g.order(), d, smallest_eigenvalue(g)};
}

double alon_chung_slack(const Graph& g, const VertexSet& a, const SpectralProfile& p) {
  if (p.n == 0) return 0.0;
  const auto size = static_cast<double>(a.size());
  const auto n = static_cast<double>(p.n);
  const double lhs = 2.0 * static_cast<double>(g.edges_within(a));
  const double rhs = p.d / n * size * size + p.lambda_min / n * size * (n - size);
  return lhs - rhs;
}

bool alon_chung_check(const Graph& g, const VertexSet& a) {
  return alon_chung_slack(g, a, profile(g)) >= -kSlack;
}

AlonChungReport alon_chung_exhaustive(const Graph& g) {
  const int n = g.order();
  if (n > kAlonChungExhaustiveCap) {
    throw ResourceError("alon_chung_exhaustive: n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kAlonChungExhaustiveCap));
  }
  const auto p = profile(g);
  const auto adj = g.adjacency_masks();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> edges(total, 0);
  AlonChungReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  report.subsets = total;
  const auto nd = static_cast<double>(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask != 0) {
      const int low = std::countr_zero(mask);
      const std::uint64_t rest = mask & (mask - 1);
      edges[mask] = edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest);
    }
    const auto size = static_cast<double>(std::popcount(mask));
    const double slack = n == 0 ? 0.0
                                : 2.0 * edges[mask] - (p.d / nd * size * size + p.lambda_min / nd * size * (nd - size));
    if (slack < report.worst_slack) {
      report.worst_slack = slack;
      report.witness = mask;
    }
  }
  return report;
}

double hoffman_bound(long long n, int d, double lambda) {
  if (std::abs(d - lambda) < 1e-12) throw DegenerateError("hoffman_bound: d equals lambda");
  if (!(d > lambda)) throw PreconditionError("hoffman_bound: need d > lambda");
  return -lambda / (d - lambda) * static_cast<double>(n);
}

LogBound eigenvalue_count_bound(long long n, int d, double lambda, double epsilon, long long m) {
  if (m < 0) throw PreconditionError("eigenvalue_count_bound: m must be non-negative");
  if (d + lambda <= 0.0) throw DegenerateError("eigenvalue_count_bound: d + lambda must be positive");
  const double ratio = lambda / (d + lambda) + epsilon;
  std::vector<std::pair<std::string, double>> params{{"n", static_cast<double>(n)},
                                                     {"d", static_cast<double>(d)},
                                                     {"lambda", lambda},
                                                     {"epsilon", epsilon},
                                                     {"m", static_cast<double>(m)}};
  if (ratio >= 1.0) return {std::numeric_limits<double>::infinity(), "eigenvalue-count (vacuous)", params};
  return {bounds::log2_binomial(ratio * static_cast<double>(n), m), "eigenvalue-count", params};
}

}  // namespace kwc::spectral

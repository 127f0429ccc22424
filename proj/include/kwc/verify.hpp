#pragma once

#include <span>
#include <string>
#include <vector>

#include "kwc/graph_families.hpp"

namespace kwc {

struct CheckRow {
  std::string check;
  int instances = 0;
  int failures = 0;
  std::string witness;  // name of the first failing graph, with detail
};

struct VerifyOptions {
  /// Perturbs the Kahn-Zhao base 2^{d+1} - 1 to 2^{d+1} + offset. Only for fault injection.
  int kahn_zhao_offset = -1;
};

/// Runs every cross-module check that applies to each graph. Rows come out in
/// a fixed order; checks with no applicable graph are omitted.
std::vector<CheckRow> verify_suite(std::span<const families::NamedGraph> catalog, const VerifyOptions& options = {});

/// Lists every independent set of g as a bit mask, in increasing numeric order. n <= 24.
std::vector<std::uint64_t> independent_set_masks(const Graph& g);

}  // namespace kwc

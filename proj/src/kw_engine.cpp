#include "kwc/kw_engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "kwc/errors.hpp"

namespace kwc {

namespace {

// One round of the encoder once the ordering of the live set is known:
// v_j moves to S, v_1..v_{j-1} and the live neighbours of v_j leave A.
KwStep apply_position(const Graph& g, const std::vector<Vertex>& order, int j, VertexSet& live,
                      VertexSet& selected, bool collect_stats) {
  KwStep step;
  step.position = j;
  step.chosen = order[static_cast<std::size_t>(j - 1)];
  step.live_before = live.size();
  for (int k = 0; k + 1 < j; ++k) live.erase(order[static_cast<std::size_t>(k)]);
  if (collect_stats) {
    step.live_trimmed = live.size();
    step.edges_trimmed = g.edges_within(live);
    step.chosen_degree = degree_in(g, step.chosen, live);
    live.for_each([&](Vertex v) { step.max_degree_trimmed = std::max(step.max_degree_trimmed, degree_in(g, v, live)); });
  }
  live.erase(step.chosen);
  live -= g.neighbors(step.chosen);
  selected.insert(step.chosen);
  step.live_after = live.size();
  return step;
}

std::vector<int> parse_int_list(std::string_view field) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < field.size()) {
    while (pos < field.size() && field[pos] == ' ') ++pos;
    if (pos >= field.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data() + pos, field.data() + field.size(), v);
    if (ec != std::errc()) throw InputError("trace: bad integer in \"" + std::string(field) + "\"");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - field.data());
    while (pos < field.size() && field[pos] == ' ') ++pos;
    if (pos < field.size()) {
      if (field[pos] != ',') throw InputError("trace: expected ',' in \"" + std::string(field) + "\"");
      ++pos;
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

KwTrace kw_run(const Graph& g, const VertexSet& i, int q) {
  if (i.universe() != static_cast<std::size_t>(g.order())) throw PreconditionError("kw_run: set universe differs from graph order");
  if (!g.is_independent(i)) throw PreconditionError("kw_run: input set is not independent");
  if (q < 0 || static_cast<std::size_t>(q) > i.size()) throw PreconditionError("kw_run: need 0 <= q <= |I|");

  KwTrace t;
  t.q = q;
  t.selected = g.empty_set();
  VertexSet live = g.vertices();
  for (int s = 0; s < q; ++s) {
    const auto order = max_degree_ordering(g, live).sequence;
    const auto it = std::find_if(order.begin(), order.end(), [&](Vertex v) { return i.contains(v); });
    const int j = static_cast<int>(it - order.begin()) + 1;
    t.positions.push_back(j);
    t.steps.push_back(apply_position(g, order, j, live, t.selected, true));
  }
  t.leftover = live & i;
  t.survivors = std::move(live);
  return t;
}

VertexSet kw_reconstruct(const Graph& g, int q, std::span<const int> positions, const VertexSet& leftover) {
  if (q < 0 || positions.size() != static_cast<std::size_t>(q)) {
    throw MalformedTraceError("trace has " + std::to_string(positions.size()) + " positions, expected q = " + std::to_string(q));
  }
  if (leftover.universe() != static_cast<std::size_t>(g.order())) throw MalformedTraceError("leftover universe differs from graph order");
  VertexSet live = g.vertices();
  VertexSet selected = g.empty_set();
  for (std::size_t s = 0; s < positions.size(); ++s) {
    const int j = positions[s];
    if (j < 1 || static_cast<std::size_t>(j) > live.size()) {
      throw MalformedTraceError("position " + std::to_string(j) + " at step " + std::to_string(s + 1) +
                                " outside live set of size " + std::to_string(live.size()));
    }
    const auto order = max_degree_ordering(g, live).sequence;
    apply_position(g, order, j, live, selected, false);
  }
  if (!leftover.is_subset_of(live)) throw MalformedTraceError("leftover is not contained in the final live set");
  return selected | leftover;
}

VertexSet fingerprint(const Graph& g, const VertexSet& i, int q) { return kw_run(g, i, q).selected; }

std::string format_trace(const KwTrace& t) {
  return std::to_string(t.q) + "; " + join(t.positions) + "; " + t.selected.to_string() + "; " + t.survivors.to_string();
}

ParsedTrace parse_trace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto semi = line.find(';', start);
    fields.push_back(line.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (fields.size() != 4) throw InputError("trace: expected 4 ';'-separated fields");
  const auto q = parse_int_list(fields[0]);
  if (q.size() != 1) throw InputError("trace: first field must be q");
  ParsedTrace p;
  p.q = q[0];
  p.positions = parse_int_list(fields[1]);
  p.selected = parse_int_list(fields[2]);
  p.survivors = parse_int_list(fields[3]);
  return p;
}

ContainerFamily::ContainerFamily(int q, std::vector<Container> entries) : q_(q), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Container& a, const Container& b) { return a.fingerprint < b.fingerprint; });
}

const Container* ContainerFamily::find(const VertexSet& fp) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), fp,
                             [](const Container& c, const VertexSet& key) { return c.fingerprint < key; });
  return it != entries_.end() && it->fingerprint == fp ? &*it : nullptr;
}

std::size_t ContainerFamily::max_container_size() const {
  std::size_t m = 0;
  for (const auto& c : entries_) m = std::max(m, c.container.size());
  return m;
}

std::vector<std::size_t> ContainerFamily::container_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const auto& c : entries_) out.push_back(c.container.size());
  return out;
}

ContainerFamily enumerate_containers(const Graph& g, int q, std::uint64_t node_cap) {
  if (q < 0) throw PreconditionError("enumerate_containers: q must be non-negative");
  std::vector<Container> found;
  std::uint64_t nodes = 0;
  std::vector<int> positions;

  auto dfs = [&](auto&& self, const VertexSet& live, const VertexSet& selected) -> void {
    if (++nodes > node_cap) {
      throw ResourceError("enumerate_containers: search exceeded " + std::to_string(node_cap) + " nodes after " +
                              std::to_string(found.size()) + " containers",
                          found.size());
    }
    const int depth = static_cast<int>(positions.size());
    if (depth == q) {
      found.push_back({positions, selected, live});
      return;
    }
    if (live.size() < static_cast<std::size_t>(q - depth)) return;
    const auto order = max_degree_ordering(g, live).sequence;
    VertexSet prefix_removed = live;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Vertex v = order[k];
      if (!g.neighbors(v).intersects(selected)) {
        VertexSet child = prefix_removed;
        child.erase(v);
        child -= g.neighbors(v);
        VertexSet next_selected = selected;
        next_selected.insert(v);
        positions.push_back(static_cast<int>(k) + 1);
        self(self, child, next_selected);
        positions.pop_back();
      }
      prefix_removed.erase(v);
    }
  };
  dfs(dfs, g.vertices(), g.empty_set());

  // Keep only fingerprints that the encoder reproduces from S itself.
  std::erase_if(found, [&](const Container& c) { return fingerprint(g, c.fingerprint, q) != c.fingerprint; });
  return ContainerFamily(q, std::move(found));
}

LogBound local_density_count_bound(long long n, long long q, double r, long long m) {
  if (q < 0 || m < q) throw PreconditionError("local_density_count_bound: need m >= q >= 0");
  if (!(r >= 0.0)) throw PreconditionError("local_density_count_bound: R must be non-negative");
  const double value = bounds::log2_binomial(static_cast<double>(n), q) + bounds::log2_binomial(std::floor(r), m - q);
  return {value,
          "local-density-count",
          {{"n", static_cast<double>(n)}, {"q", static_cast<double>(q)}, {"R", r}, {"m", static_cast<double>(m)}}};
}

BigInt local_density_count_bound_exact(long long n, long long q, double r, long long m) {
  if (q < 0 || m < q) throw PreconditionError("local_density_count_bound: need m >= q >= 0");
  if (!(r >= 0.0)) throw PreconditionError("local_density_count_bound: R must be non-negative");
  return binomial(n, q) * binomial(static_cast<std::int64_t>(std::floor(r)), m - q);
}

DensityProfile::DensityProfile(const Graph& g, int cap) {
  const int n = g.order();
  if (cap > 28) throw PreconditionError("DensityProfile: cap above 28 is not supported");
  if (n > cap) throw ResourceError("density check: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const auto adj = g.adjacency_masks();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint16_t> edges(total, 0);
  min_edges_.assign(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(-1));
  min_edges_[0] = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest));
    auto& slot = min_edges_[static_cast<std::size_t>(std::popcount(mask))];
    slot = std::min<std::size_t>(slot, edges[mask]);
  }
}

bool DensityProfile::satisfies_beta(double r, double beta) const {
  const int n = order();
  const int first = std::max(0, static_cast<int>(std::ceil(r)));
  for (int k = first; k <= n; ++k) {
    if (2.0 * static_cast<double>(min_edges_[static_cast<std::size_t>(k)]) + 1e-9 < beta * k * (k - 1.0)) return false;
  }
  return true;
}

bool DensityProfile::satisfies_average_degree(double r, double d) const {
  const int n = order();
  const int first = std::max(0, static_cast<int>(std::ceil(r)));
  for (int k = first; k <= n; ++k) {
    if (2.0 * static_cast<double>(min_edges_[static_cast<std::size_t>(k)]) + 1e-9 < d * k) return false;
  }
  return true;
}

bool verify_density_beta(const Graph& g, double r, double beta, int cap) {
  return DensityProfile(g, cap).satisfies_beta(r, beta);
}

bool verify_density_D(const Graph& g, double r, double d, int cap) {
  return DensityProfile(g, cap).satisfies_average_degree(r, d);
}

LogBound total_count_bound(long long n, int q, std::span<const std::size_t> container_sizes) {
  BigInt sum = 0;
  for (int m = 0; m < q; ++m) sum += binomial(n, m);
  for (auto s : container_sizes) sum += BigInt(1) << s;
  return {log2_big(sum), "total-count", {{"n", static_cast<double>(n)}, {"q", static_cast<double>(q)}}};
}

}  // namespace kwc

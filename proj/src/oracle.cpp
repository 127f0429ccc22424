#include "kwc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <set>
#include <unordered_map>

#include "kwc/errors.hpp"

namespace kwc {

CountTable::CountTable(std::vector<BigInt> by_size) : by_size_(std::move(by_size)) {
  for (const auto& c : by_size_) total_ += c;
}

BigInt CountTable::at(std::size_t m) const { return m < by_size_.size() ? by_size_[m] : BigInt(0); }

int CountTable::max_size() const {
  for (int m = static_cast<int>(by_size_.size()) - 1; m >= 0; --m) {
    if (!by_size_[static_cast<std::size_t>(m)].is_zero()) return m;
  }
  return -1;
}

void write_count_table(std::ostream& out, const CountTable& t) {
  out << "m,count\n";
  // Rows stop at the largest nonzero size; m = 0 is always present.
  const auto last = static_cast<std::size_t>(std::max(t.max_size(), 0));
  for (std::size_t m = 0; m <= last && m < t.by_size().size(); ++m) out << m << ',' << t.by_size()[m] << '\n';
  out << "total," << t.total() << '\n';
}

}  // namespace kwc

namespace kwc::oracle {

namespace {

using Poly = std::vector<std::uint64_t>;

Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

class IndependentSetCounter {
 public:
  explicit IndependentSetCounter(std::span<const Mask> adj) : adj_(adj) {}

  Poly solve(Mask live) {
    if (live == 0) return {1};
    const int count = std::popcount(live);
    if (count == 1) return {1, 1};

    Mask comp = live & (~live + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj_[static_cast<std::size_t>(v)] & live & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    if (comp != live) return poly_mul(solve(comp), solve(live & ~comp));

    const bool memoise = count >= 12;
    if (memoise) {
      if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    }
    int pick = -1;
    int pick_deg = -1;
    for (Mask rest = live; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & live);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    const Mask without = live & ~(Mask{1} << pick);
    Poly with = solve(without & ~adj_[static_cast<std::size_t>(pick)]);
    with.insert(with.begin(), 0);
    Poly result = poly_add(solve(without), with);
    if (memoise) memo_.emplace(live, result);
    return result;
  }

 private:
  std::span<const Mask> adj_;
  std::unordered_map<Mask, Poly> memo_;
};

CountTable to_table(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> by_size;
  by_size.reserve(counts.size());
  for (auto c : counts) by_size.emplace_back(c);
  return CountTable(std::move(by_size));
}

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceError(std::string(what) + ": size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Normalised copy of a set of positive integers: sorted, unique.
std::vector<int> normalise(std::span<const int> a) {
  std::vector<int> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// third[i][j] (i < j) = index of 2 a_j - a_i in `vals`, or -1.
std::vector<std::vector<int>> ap_completions(const std::vector<int>& vals) {
  const std::size_t k = vals.size();
  std::vector<std::vector<int>> third(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const long long target = 2LL * vals[j] - vals[i];
      auto it = std::lower_bound(vals.begin(), vals.end(), target);
      if (it != vals.end() && *it == target) third[i][j] = static_cast<int>(it - vals.begin());
    }
  }
  return third;
}

// Indices that would complete an AP with j as the middle term and a chosen smaller index.
Mask forbidden_after(const std::vector<std::vector<int>>& third, Mask chosen, int j) {
  Mask f = 0;
  for (Mask rest = chosen; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (i < j && third[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= 0) {
      f |= Mask{1} << third[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return f;
}

class ApFreeSearch {
 public:
  explicit ApFreeSearch(std::vector<int> vals) : vals_(std::move(vals)), third_(ap_completions(vals_)) {}

  // Largest AP-free subset; stops early once `stop_at` is reached.
  int run(int stop_at) {
    stop_at_ = stop_at;
    best_ = 0;
    search(0, 0, 0, 0);
    return best_;
  }

 private:
  void search(int idx, Mask chosen, Mask forbidden, int size) {
    best_ = std::max(best_, size);
    if (best_ >= stop_at_) return;
    const int k = static_cast<int>(vals_.size());
    if (idx == k) return;
    const Mask tail = (k == 64 ? ~Mask{0} : (Mask{1} << k) - 1) & ~((Mask{1} << idx) - 1);
    if (size + std::popcount(tail & ~forbidden) <= best_) return;
    if (!((forbidden >> idx) & 1U)) {
      search(idx + 1, chosen | (Mask{1} << idx), forbidden | forbidden_after(third_, chosen, idx), size + 1);
    }
    search(idx + 1, chosen, forbidden, size);
  }

  std::vector<int> vals_;
  std::vector<std::vector<int>> third_;
  int best_ = 0;
  int stop_at_ = 0;
};

}  // namespace

std::vector<std::uint64_t> independent_set_polynomial(std::span<const Mask> adjacency) {
  if (adjacency.size() > 64) throw PreconditionError("independent_set_polynomial: more than 64 vertices");
  const int n = static_cast<int>(adjacency.size());
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  IndependentSetCounter counter(adjacency);
  auto p = counter.solve(all);
  p.resize(static_cast<std::size_t>(n) + 1, 0);
  return p;
}

CountTable count_independent_sets(const Graph& g, int cap) {
  require_cap(g.order(), std::min(cap, 64), "count_independent_sets");
  const auto adj = g.adjacency_masks();
  return to_table(independent_set_polynomial(adj));
}

CountTable count_independent_sets_exhaustive(const Graph& g, int cap) {
  const int n = g.order();
  require_cap(n, std::min(cap, 30), "count_independent_sets_exhaustive");
  const auto adj = g.adjacency_masks();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> ok(total, 0);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  ok[0] = 1;
  counts[0] = 1;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    if (ok[rest] && (adj[static_cast<std::size_t>(low)] & rest) == 0) {
      ok[mask] = 1;
      ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  return to_table(counts);
}

int independence_number(const Graph& g, int cap) { return count_independent_sets(g, cap).max_size(); }

bool is_sum_free(std::span<const long long> set) {
  std::set<long long> members;
  for (auto x : set) {
    if (x <= 0) throw InputError("is_sum_free: elements must be positive, got " + std::to_string(x));
    members.insert(x);
  }
  for (auto i = members.begin(); i != members.end(); ++i) {
    for (auto j = i; j != members.end(); ++j) {
      if (members.count(*i + *j) != 0) return false;
    }
  }
  return true;
}

CountTable count_sum_free(int n, int cap) {
  if (n < 0) throw PreconditionError("count_sum_free: n must be non-negative");
  require_cap(n, std::min(cap, 31), "count_sum_free");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  // Bit x stands for the integer x; `forbidden` holds every pairwise sum so far.
  auto dfs = [&](auto&& self, int start, Mask set, Mask forbidden, int size) -> void {
    ++counts[static_cast<std::size_t>(size)];
    for (int z = start; z <= n; ++z) {
      if ((forbidden >> z) & 1U) continue;
      self(self, z + 1, set | (Mask{1} << z), forbidden | (set << z) | (Mask{1} << (2 * z)), size + 1);
    }
  };
  dfs(dfs, 1, 0, 0, 0);
  return to_table(counts);
}

CountTable count_sum_free_exhaustive(int n, int cap) {
  if (n < 0) throw PreconditionError("count_sum_free_exhaustive: n must be non-negative");
  require_cap(n, std::min(cap, 30), "count_sum_free_exhaustive");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t raw = 0; raw < total; ++raw) {
    const Mask set = raw << 1;  // bit x <-> integer x
    bool ok = true;
    for (Mask rest = set; rest != 0 && ok; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (((set << x) & set) != 0) ok = false;
    }
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(raw))];
  }
  return to_table(counts);
}

std::vector<std::vector<int>> list_sum_free(int n, int cap) {
  require_cap(n, std::min(cap, 31), "list_sum_free");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto dfs = [&](auto&& self, int start, Mask set, Mask forbidden) -> void {
    out.push_back(current);
    for (int z = start; z <= n; ++z) {
      if ((forbidden >> z) & 1U) continue;
      current.push_back(z);
      self(self, z + 1, set | (Mask{1} << z), forbidden | (set << z) | (Mask{1} << (2 * z)));
      current.pop_back();
    }
  };
  dfs(dfs, 1, 0, 0);
  return out;
}

std::uint64_t count_3aps(std::span<const int> b, int n) {
  std::vector<bool> in(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (int x : b) {
    if (x < 1 || x > n) throw PreconditionError("count_3aps: element " + std::to_string(x) + " outside [1, n]");
    in[static_cast<std::size_t>(x)] = true;
  }
  std::uint64_t count = 0;
  for (int x = 1; x <= n; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (int d = 1; x + 2 * d <= n; ++d) {
      if (in[static_cast<std::size_t>(x + d)] && in[static_cast<std::size_t>(x + 2 * d)]) ++count;
    }
  }
  return count;
}

CountTable count_3ap_free(std::span<const int> b, int cap) {
  const auto vals = normalise(b);
  require_cap(static_cast<int>(vals.size()), std::min(cap, 64), "count_3ap_free");
  const auto third = ap_completions(vals);
  const int k = static_cast<int>(vals.size());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
  auto dfs = [&](auto&& self, int start, Mask chosen, Mask forbidden, int size) -> void {
    ++counts[static_cast<std::size_t>(size)];
    for (int j = start; j < k; ++j) {
      if ((forbidden >> j) & 1U) continue;
      self(self, j + 1, chosen | (Mask{1} << j), forbidden | forbidden_after(third, chosen, j), size + 1);
    }
  };
  dfs(dfs, 0, 0, 0, 0);
  return to_table(counts);
}

CountTable count_3ap_free(int n, int cap) {
  if (n < 0) throw PreconditionError("count_3ap_free: n must be non-negative");
  require_cap(n, cap, "count_3ap_free");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return count_3ap_free(all, cap);
}

CountTable count_3ap_free_exhaustive(int n, int cap) {
  if (n < 0) throw PreconditionError("count_3ap_free_exhaustive: n must be non-negative");
  require_cap(n, std::min(cap, 30), "count_3ap_free_exhaustive");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < total; ++set) {
    bool ok = true;
    for (int d = 1; 2 * d < n && ok; ++d) {
      if ((set & (set >> d) & (set >> (2 * d))) != 0) ok = false;
    }
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(set))];
  }
  return to_table(counts);
}

int max_3ap_free_subset(std::span<const int> a, int cap) {
  auto vals = normalise(a);
  require_cap(static_cast<int>(vals.size()), std::min(cap, 64), "max_3ap_free_subset");
  const int k = static_cast<int>(vals.size());
  return ApFreeSearch(std::move(vals)).run(k + 1);
}

bool has_3ap_free_subset_of_size(std::span<const int> a, int target, int cap) {
  auto vals = normalise(a);
  require_cap(static_cast<int>(vals.size()), std::min(cap, 64), "has_3ap_free_subset_of_size");
  if (target <= 0) return true;
  return ApFreeSearch(std::move(vals)).run(target) >= target;
}

int max_3ap_free_subset_exhaustive(std::span<const int> a) {
  const auto vals = normalise(a);
  const int k = static_cast<int>(vals.size());
  require_cap(k, 20, "max_3ap_free_subset_exhaustive");
  std::vector<Mask> triples;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int l = j + 1; l < k; ++l) {
        if (vals[static_cast<std::size_t>(j)] - vals[static_cast<std::size_t>(i)] ==
            vals[static_cast<std::size_t>(l)] - vals[static_cast<std::size_t>(j)]) {
          triples.push_back((Mask{1} << i) | (Mask{1} << j) | (Mask{1} << l));
        }
      }
    }
  }
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    if (std::popcount(s) <= best) continue;
    if (std::none_of(triples.begin(), triples.end(), [&](Mask t) { return (s & t) == t; })) best = std::popcount(s);
  }
  return best;
}

bool has_c4(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.neighbors(u).count_common(g.neighbors(v)) >= 2) return true;
    }
  }
  return false;
}

bool has_c4(std::span<const Mask> adjacency) {
  const std::size_t n = adjacency.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (std::popcount(adjacency[u] & adjacency[v]) >= 2) return true;
    }
  }
  return false;
}

C4Census c4_free_census(int n, int cap) {
  if (n < 0) throw PreconditionError("c4_free_census: n must be non-negative");
  require_cap(n, std::min(cap, 9), "c4_free_census");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 1;  // the empty graph
  int edges = 0;
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    // Gray code: step k flips the edge slot at the lowest set bit of k.
    const auto [u, v] = slots[static_cast<std::size_t>(std::countr_zero(k))];
    adj[static_cast<std::size_t>(u)] ^= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] ^= Mask{1} << u;
    edges += ((adj[static_cast<std::size_t>(u)] >> v) & 1U) ? 1 : -1;
    if (!has_c4(adj)) {
      ++count;
      best = std::max(best, edges);
    }
  }
  return {BigInt(count), best};
}

BigInt count_c4_free_graphs(int n, int cap) { return c4_free_census(n, cap).count; }

}  // namespace kwc::oracle

#include "kwc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kwc/arithmetic.hpp"
#include "kwc/c4.hpp"
#include "kwc/errors.hpp"
#include "kwc/graph_families.hpp"
#include "kwc/graph_io.hpp"
#include "kwc/kw_engine.hpp"
#include "kwc/oracle.hpp"
#include "kwc/spectral.hpp"
#include "kwc/verify.hpp"

namespace kwc::cli {

namespace {

// Every flag any subcommand may take; each subcommand registers only its own.
struct Flags {
  std::string graph;
  std::vector<std::string> graphs;
  std::string set;
  std::string shifts;
  std::string q_rule = "minimal";
  std::string fault;
  bool no_builtin = false;
  long long n = 0;
  long long m = 0;
  long long d = 0;
  long long q = 0;
  long long k = -1;
  long long alpha = 0;
  long long b = 0;
  std::optional<long long> d_opt;
  double a = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double beta = 0.0;
  double r = 0.0;
  double avg_degree = 0.0;
  double c = 0.0;
  double lambda = 0.0;
  std::optional<double> beta_opt;
  std::optional<double> d_real_opt;
  std::optional<double> r_opt;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::uint64_t cap = 0;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, end - start);
    if (!item.empty()) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw InputError("bad list element '" + std::string(item) + "'");
      }
      out.push_back(value);
    }
    start = end + 1;
  }
  return out;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  VertexSet s(static_cast<std::size_t>(g.order()));
  for (int v : parse_list(text)) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

c4::QRule parse_q_rule(const std::string& name) {
  if (name == "minimal") return c4::QRule::minimal;
  if (name == "polylog") return c4::QRule::polylog;
  throw InputError("unknown q rule '" + name + "' (expected minimal or polylog)");
}

void write_bound_header(std::ostream& out) { out << "provenance,params,log2_value\n"; }
void write_bound_row(std::ostream& out, const LogBound& b) {
  out << b.provenance << ',' << b.params_string() << ',' << format_real(b.log2_value) << '\n';
}
int print_bound(std::ostream& out, const LogBound& b) {
  write_bound_header(out);
  write_bound_row(out, b);
  return kExitOk;
}

int write_rows(std::ostream& out, const std::vector<CheckRow>& rows) {
  out << "check,instances,failures,witness\n";
  bool failed = false;
  for (const auto& r : rows) {
    out << r.check << ',' << r.instances << ',' << r.failures << ',' << r.witness << '\n';
    failed = failed || r.failures > 0;
  }
  return failed ? kExitViolation : kExitOk;
}

std::string members(const VertexSet& s) { return s.to_string(" "); }

int kw_verify(std::ostream& out, const Flags& f) {
  const auto g = load_graph_file(f.graph);
  const int n = g.order();
  const int q = static_cast<int>(f.q);
  const auto sets = independent_set_masks(g);
  std::vector<CheckRow> rows;

  CheckRow inv{"kw-invertibility", 0, 0, {}};
  for (const auto mask : sets) {
    const auto i = VertexSet::from_mask(static_cast<std::size_t>(n), mask);
    if (static_cast<int>(i.size()) < q) continue;
    ++inv.instances;
    const auto t = kw_run(g, i, q);
    long long sum = 0;
    for (int j : t.positions) sum += j;
    const bool ok = kw_reconstruct(g, q, t.positions, t.leftover) == i && fingerprint(g, t.selected, q) == t.selected &&
                    sum <= static_cast<long long>(n) - static_cast<long long>(t.survivors.size());
    if (!ok && inv.failures++ == 0) inv.witness = "I={" + members(i) + "}";
  }
  rows.push_back(inv);

  if (f.beta_opt) {
    CheckRow row{"local-density-count", 0, 0, {}};
    if (!f.r_opt) throw InputError("--beta needs --R");
    const double r = *f.r_opt;
    if (verify_density_beta(g, r, *f.beta_opt) && r >= std::exp(-*f.beta_opt * q) * n) {
      const auto counts = oracle::count_independent_sets(g);
      for (int m = q; m <= counts.max_size(); ++m) {
        ++row.instances;
        if (counts.at(static_cast<std::size_t>(m)) > local_density_count_bound_exact(n, q, r, m) && row.failures++ == 0) {
          row.witness = "m=" + std::to_string(m);
        }
      }
    } else {
      row.witness = "hypotheses not met";
    }
    rows.push_back(row);
  }
  if (f.d_real_opt) {
    CheckRow row{"containers", 0, 0, {}};
    if (!f.r_opt) throw InputError("--D needs --R");
    const double r = *f.r_opt;
    const auto family = enumerate_containers(g, q, f.cap == 0 ? 10'000'000 : f.cap);
    const bool hypotheses = verify_density_D(g, r, *f.d_real_opt) && r + q * *f.d_real_opt >= n;
    if (hypotheses) {
      for (const auto& e : family.entries()) {
        ++row.instances;
        if (static_cast<double>(e.container.size()) > r && row.failures++ == 0) {
          row.witness = "S={" + members(e.fingerprint) + "}";
        }
      }
    } else {
      row.witness = "hypotheses not met";
    }
    for (const auto mask : sets) {
      const auto i = VertexSet::from_mask(static_cast<std::size_t>(n), mask);
      if (static_cast<int>(i.size()) < q) continue;
      ++row.instances;
      const auto s = fingerprint(g, i, q);
      const auto* e = family.find(s);
      if ((e == nullptr || !i.is_subset_of(e->container | s)) && row.failures++ == 0) {
        row.witness = "I={" + members(i) + "}";
      }
    }
    rows.push_back(row);
  }
  return write_rows(out, rows);
}

int spectral_check(std::ostream& out, const Flags& f) {
  const auto g = load_graph_file(f.graph);
  const auto p = spectral::profile(g);
  const int alpha = oracle::independence_number(g);
  const auto report = spectral::alon_chung_exhaustive(g);
  out << "n,d,lambda_min,hoffman,alpha,alon_chung_worst_slack,subsets\n";
  const double hoffman = p.d > 0 ? spectral::hoffman_bound(p.n, p.d, p.lambda_min) : static_cast<double>(p.n);
  out << p.n << ',' << p.d << ',' << format_real(p.lambda_min) << ',' << format_real(hoffman) << ',' << alpha << ','
      << format_real(report.worst_slack) << ',' << report.subsets << '\n';
  const bool ok = report.holds() && alpha <= hoffman + spectral::kSlack;
  return ok ? kExitOk : kExitViolation;
}

int run_verify_suite(std::ostream& out, const Flags& f) {
  std::vector<families::NamedGraph> catalog;
  if (!f.no_builtin) catalog = families::builtin_catalog();
  for (const auto& path : f.graphs) catalog.push_back({path, load_graph_file(path)});
  VerifyOptions options;
  if (f.fault == "kahn-zhao") {
    options.kahn_zhao_offset = -2;
  } else if (!f.fault.empty()) {
    throw InputError("unknown fault '" + f.fault + "' (expected kahn-zhao)");
  }
  return write_rows(out, verify_suite(catalog, options));
}

struct Builder {
  Flags& f;

  CLI::Option* graph(CLI::App* app) { return app->add_option("--graph", f.graph, "edge-list file")->required(); }
  CLI::Option* n(CLI::App* app) { return app->add_option("--n", f.n)->required(); }
  CLI::Option* m(CLI::App* app) { return app->add_option("--m", f.m)->required(); }
  CLI::Option* d(CLI::App* app) { return app->add_option("--d", f.d)->required(); }
  CLI::Option* q(CLI::App* app) { return app->add_option("--q", f.q)->required(); }
  CLI::Option* delta(CLI::App* app) { return app->add_option("--delta", f.delta)->required(); }
  CLI::Option* epsilon(CLI::App* app) { return app->add_option("--epsilon", f.epsilon)->required(); }
  CLI::Option* beta(CLI::App* app) { return app->add_option("--beta", f.beta)->required(); }
  CLI::Option* c(CLI::App* app) { return app->add_option("--C", f.c)->required(); }
  CLI::Option* cap(CLI::App* app) { return app->add_option("--cap", f.cap, "oracle size cap or search-node cap"); }
  CLI::Option* q_rule(CLI::App* app) { return app->add_option("--q-rule", f.q_rule, "minimal or polylog"); }
};

int cap_or(std::uint64_t cap, int fallback) { return cap == 0 ? fallback : static_cast<int>(cap); }

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  Builder opt{f};
  std::function<int()> action;
  CLI::App app{"Independent-set counting and container experiments", "kwcount"};
  app.require_subcommand(1);
  auto on = [&](CLI::App* sub, std::function<int()> body) { sub->callback([&action, body] { action = body; }); };

  // is
  auto* is = app.add_subcommand("is", "independent-set oracle")->require_subcommand(1);
  auto* is_count = is->add_subcommand("count", "i(G, m) for every m");
  opt.graph(is_count);
  opt.cap(is_count);
  on(is_count, [&] {
    write_count_table(out, oracle::count_independent_sets(load_graph_file(f.graph), cap_or(f.cap, oracle::kIndependentSetCap)));
    return kExitOk;
  });
  auto* is_alpha = is->add_subcommand("alpha", "independence number");
  opt.graph(is_alpha);
  opt.cap(is_alpha);
  on(is_alpha, [&] {
    const auto g = load_graph_file(f.graph);
    out << "n,alpha\n" << g.order() << ',' << oracle::independence_number(g, cap_or(f.cap, oracle::kIndependentSetCap)) << '\n';
    return kExitOk;
  });

  // kw
  auto* kw = app.add_subcommand("kw", "Kleitman-Winston encoder")->require_subcommand(1);
  auto* kw_trace = kw->add_subcommand("trace", "run the encoder on one independent set");
  opt.graph(kw_trace);
  opt.q(kw_trace);
  kw_trace->add_option("--set", f.set, "comma-separated independent set")->required();
  on(kw_trace, [&] {
    const auto g = load_graph_file(f.graph);
    const auto t = kw_run(g, parse_set(g, f.set), static_cast<int>(f.q));
    out << "q; positions; selected; survivors\n" << format_trace(t) << '\n';
    return kExitOk;
  });
  auto* kw_containers = kw->add_subcommand("containers", "enumerate fingerprints and containers");
  opt.graph(kw_containers);
  opt.q(kw_containers);
  opt.cap(kw_containers);
  on(kw_containers, [&] {
    const auto g = load_graph_file(f.graph);
    const auto family = enumerate_containers(g, static_cast<int>(f.q), f.cap == 0 ? 10'000'000 : f.cap);
    out << "fingerprint,container,size,positions\n";
    for (const auto& e : family.entries()) {
      out << members(e.fingerprint) << ',' << members(e.container) << ',' << e.container.size() << ','
          << join(e.positions, ' ') << '\n';
    }
    return kExitOk;
  });
  auto* kw_verify_cmd = kw->add_subcommand("verify", "check invertibility and, given parameters, the container lemmas");
  opt.graph(kw_verify_cmd);
  opt.q(kw_verify_cmd);
  opt.cap(kw_verify_cmd);
  kw_verify_cmd->add_option("--R", f.r_opt);
  kw_verify_cmd->add_option("--beta", f.beta_opt);
  kw_verify_cmd->add_option("--D", f.d_real_opt);
  on(kw_verify_cmd, [&] { return kw_verify(out, f); });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds, in log2")->require_subcommand(1);
  auto* b_binom = bounds_cmd->add_subcommand("binomial", "log2 binom(a, b)");
  b_binom->add_option("--a", f.a)->required();
  b_binom->add_option("--b", f.b)->required();
  on(b_binom, [&] {
    return print_bound(out, {bounds::log2_binomial(f.a, f.b), "log2-binomial", {{"a", f.a}, {"b", static_cast<double>(f.b)}}});
  });
  auto* b_sandwich = bounds_cmd->add_subcommand("sandwich", "2^alpha <= i(G) <= sum of binomials");
  b_sandwich->add_option("--alpha", f.alpha)->required();
  opt.n(b_sandwich);
  on(b_sandwich, [&] {
    const auto s = bounds::sandwich_bounds(static_cast<int>(f.alpha), static_cast<int>(f.n));
    const std::vector<std::pair<std::string, double>> params{{"alpha", static_cast<double>(f.alpha)},
                                                             {"n", static_cast<double>(f.n)}};
    write_bound_header(out);
    write_bound_row(out, {s.lower, "sandwich-lower", params});
    write_bound_row(out, {s.upper, "sandwich-upper", params});
    return kExitOk;
  });
  auto* b_sap = bounds_cmd->add_subcommand("sapozhenko", "regular graphs, (1 + C sqrt(ln d / d)) n / 2");
  opt.n(b_sap);
  opt.d(b_sap);
  opt.c(b_sap);
  on(b_sap, [&] { return print_bound(out, bounds::sapozhenko_bound(f.n, f.d, f.c)); });
  auto* b_kz = bounds_cmd->add_subcommand("kahn-zhao", "regular graphs, (n / 2d) log2(2^{d+1} - 1)");
  opt.n(b_kz);
  opt.d(b_kz);
  on(b_kz, [&] { return print_bound(out, bounds::kahn_zhao_bound(f.n, static_cast<int>(f.d))); });
  auto* b_c4 = bounds_cmd->add_subcommand("kw-c4", "C n^{3/2}");
  opt.n(b_c4);
  opt.c(b_c4);
  on(b_c4, [&] { return print_bound(out, bounds::kw_c4_bound(f.n, f.c)); });
  auto* b_ap = bounds_cmd->add_subcommand("ap-free", "log2 binom(epsilon n, m)");
  opt.n(b_ap);
  opt.m(b_ap);
  opt.epsilon(b_ap);
  on(b_ap, [&] { return print_bound(out, bounds::ap_free_count_bound(f.n, f.m, f.epsilon)); });
  auto* b_fail = bounds_cmd->add_subcommand("roth-failure", "probability that a random m-set is not delta-Roth");
  opt.n(b_fail);
  opt.m(b_fail);
  opt.delta(b_fail);
  b_fail->add_option("--epsilon", f.epsilon, "defaults to delta / 6");
  on(b_fail, [&] {
    const auto fb = bounds::random_roth_failure_bound(f.n, f.m, f.delta, f.epsilon);
    write_bound_header(out);
    write_bound_row(out, fb.chain);
    write_bound_row(out, fb.simplified);
    return kExitOk;
  });
  auto* b_local = bounds_cmd->add_subcommand("local-density", "binom(n, q) binom(R, m - q)");
  opt.n(b_local);
  opt.q(b_local);
  opt.m(b_local);
  b_local->add_option("--R", f.r)->required();
  on(b_local, [&] { return print_bound(out, local_density_count_bound(f.n, f.q, f.r, f.m)); });
  auto* b_eig = bounds_cmd->add_subcommand("eigenvalue", "binom((lambda / (d + lambda) + epsilon) n, m)");
  opt.n(b_eig);
  opt.d(b_eig);
  opt.epsilon(b_eig);
  opt.m(b_eig);
  b_eig->add_option("--lambda", f.lambda, "minus the smallest eigenvalue")->required();
  on(b_eig, [&] {
    return print_bound(out, spectral::eigenvalue_count_bound(f.n, static_cast<int>(f.d), f.lambda, f.epsilon, f.m));
  });
  auto* b_sf = bounds_cmd->add_subcommand("sum-free", "two-term bound on sum-free subsets of [n]");
  opt.n(b_sf);
  opt.c(b_sf);
  on(b_sf, [&] { return print_bound(out, arith::sum_free_count_bound(f.n, f.c)); });
  auto* b_rec = bounds_cmd->add_subcommand("ap-recursion", "AP-free count after K recursion steps");
  opt.n(b_rec);
  opt.m(b_rec);
  opt.epsilon(b_rec);
  opt.beta(b_rec);
  b_rec->add_option("--K", f.k, "defaults to ceil((12 - 6 epsilon) / beta)");
  on(b_rec, [&] {
    const int k = f.k >= 0 ? static_cast<int>(f.k) : arith::default_recursion_depth(f.epsilon, f.beta);
    return print_bound(out, arith::ap_free_recursion_bound(f.n, f.m, f.epsilon, f.beta, k));
  });
  auto* b_ext = bounds_cmd->add_subcommand("c4-extension", "ways to attach a degree-d vertex to a C4-free graph");
  opt.n(b_ext);
  opt.d(b_ext);
  opt.q_rule(b_ext);
  on(b_ext, [&] { return print_bound(out, c4::c4_extension_bound(f.n, f.d, parse_q_rule(f.q_rule))); });
  auto* b_c4free = bounds_cmd->add_subcommand("c4-free", "labelled C4-free graphs on n vertices");
  opt.n(b_c4free);
  opt.q_rule(b_c4free);
  on(b_c4free, [&] { return print_bound(out, c4::c4_free_count_bound(f.n, parse_q_rule(f.q_rule))); });
  auto* b_total = bounds_cmd->add_subcommand("containers-total", "small sets plus 2^{|f(S)|} over the container family");
  opt.graph(b_total);
  opt.q(b_total);
  opt.cap(b_total);
  on(b_total, [&] {
    const auto g = load_graph_file(f.graph);
    const auto family = enumerate_containers(g, static_cast<int>(f.q), f.cap == 0 ? 10'000'000 : f.cap);
    const auto sizes = family.container_sizes();
    return print_bound(out, total_count_bound(g.order(), static_cast<int>(f.q), sizes));
  });

  // spectral
  auto* spectral_cmd = app.add_subcommand("spectral", "eigenvalue checks")->require_subcommand(1);
  auto* spectral_check_cmd = spectral_cmd->add_subcommand("check", "smallest eigenvalue, Hoffman bound and the subset-density inequality");
  opt.graph(spectral_check_cmd);
  on(spectral_check_cmd, [&] { return spectral_check(out, f); });

  // sumfree
  auto* sf = app.add_subcommand("sumfree", "sum-free subsets of [n]")->require_subcommand(1);
  auto* sf_count = sf->add_subcommand("count", "sum-free subsets by size");
  opt.n(sf_count);
  opt.cap(sf_count);
  on(sf_count, [&] {
    write_count_table(out, oracle::count_sum_free(static_cast<int>(f.n), cap_or(f.cap, oracle::kSumFreeCap)));
    return kExitOk;
  });
  auto* sf_gs = sf->add_subcommand("gs", "the circulant graph G_S; vertex i stands for the integer i + 1");
  opt.n(sf_gs);
  sf_gs->add_option("--s", f.shifts, "comma-separated shifts")->required();
  on(sf_gs, [&] {
    const auto shifts = parse_list(f.shifts);
    write_graph(out, arith::build_gs_graph(static_cast<int>(f.n), shifts));
    return kExitOk;
  });

  // c4
  auto* c4_cmd = app.add_subcommand("c4", "C4-free graphs")->require_subcommand(1);
  auto* c4_count = c4_cmd->add_subcommand("count", "exact count of labelled C4-free graphs");
  opt.n(c4_count);
  opt.cap(c4_count);
  on(c4_count, [&] {
    const auto census = oracle::c4_free_census(static_cast<int>(f.n), cap_or(f.cap, oracle::kC4FreeGraphCap));
    out << "n,count,max_edges\n" << f.n << ',' << census.count.str() << ',' << census.max_edges << '\n';
    return kExitOk;
  });
  auto* c4_ext = c4_cmd->add_subcommand("extensions", "ways to attach a new vertex keeping the graph C4-free");
  opt.graph(c4_ext);
  c4_ext->add_option("--d", f.d_opt, "neighbourhood size; all sizes when omitted");
  on(c4_ext, [&] {
    const auto g = load_graph_file(f.graph);
    if (f.d_opt) {
      out << "d,count\n" << *f.d_opt << ',' << c4::count_c4_extensions(g, static_cast<int>(*f.d_opt)).str() << '\n';
    } else {
      write_count_table(out, c4::c4_extension_profile(g));
    }
    return kExitOk;
  });
  auto* c4_bound = c4_cmd->add_subcommand("bound", "upper bound on log2 of the number of C4-free graphs");
  opt.n(c4_bound);
  opt.q_rule(c4_bound);
  on(c4_bound, [&] { return print_bound(out, c4::c4_free_count_bound(f.n, parse_q_rule(f.q_rule))); });

  // roth
  auto* roth = app.add_subcommand("roth", "delta-Roth sets")->require_subcommand(1);
  auto* roth_exp = roth->add_subcommand("experiment", "how often a random m-subset of [n] is delta-Roth");
  opt.n(roth_exp);
  opt.m(roth_exp);
  opt.delta(roth_exp);
  roth_exp->add_option("--trials", f.trials);
  roth_exp->add_option("--seed", f.seed);
  on(roth_exp, [&] {
    const auto r = arith::roth_random_experiment(static_cast<int>(f.n), static_cast<int>(f.m), f.delta, f.trials, f.seed);
    out << "n,m,delta,trials,seed,successes,probability\n"
        << f.n << ',' << f.m << ',' << format_real(f.delta) << ',' << r.trials << ',' << f.seed << ',' << r.successes
        << ',' << format_real(r.probability()) << '\n';
    return kExitOk;
  });
  auto* roth_check = roth->add_subcommand("check", "decide whether a set is delta-Roth");
  roth_check->add_option("--set", f.set, "comma-separated positive integers")->required();
  opt.delta(roth_check);
  on(roth_check, [&] {
    auto a = parse_list(f.set);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    const int largest = oracle::max_3ap_free_subset(a);
    out << "size,max_ap_free,threshold,delta_roth\n"
        << a.size() << ',' << largest << ',' << arith::roth_threshold(a.size(), f.delta) << ','
        << (arith::is_delta_roth(a, f.delta) ? "true" : "false") << '\n';
    return kExitOk;
  });

  // varnavides
  auto* varn = app.add_subcommand("varnavides", "fewest 3-APs in a subset of [n] with at least delta n elements");
  opt.n(varn);
  opt.delta(varn);
  on(varn, [&] {
    const auto p = arith::varnavides_profile(static_cast<int>(f.n), f.delta);
    out << "n,delta,min_count,beta_estimate\n"
        << f.n << ',' << format_real(f.delta) << ',' << p.min_count << ',' << format_real(p.beta_estimate) << '\n';
    return kExitOk;
  });

  // verify-suite
  auto* suite = app.add_subcommand("verify-suite", "run every cross-check over a graph catalog");
  suite->add_option("--graph", f.graphs, "extra edge-list files");
  suite->add_flag("--no-builtin", f.no_builtin, "skip the built-in catalog");
  suite->add_option("--fault", f.fault, "inject a known fault (kahn-zhao)");
  on(suite, [&] { return run_verify_suite(out, f); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const ResourceError& e) {
    err << "resource cap exceeded: " << e.what();
    if (e.partial()) err << " (partial=" << *e.partial() << ")";
    err << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace kwc::cli

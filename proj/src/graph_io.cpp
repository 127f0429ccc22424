#include "kwc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kwc/errors.hpp"

namespace kwc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Exactly two non-negative integers separated by whitespace.
std::pair<long long, long long> parse_pair(std::string_view line, std::size_t line_no) {
  long long vals[2];
  std::size_t pos = 0;
  for (int k = 0; k < 2; ++k) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, vals[k]);
    if (ec != std::errc() || ptr == first) {
      throw InputError("line " + std::to_string(line_no) + ": expected two integers, got \"" +
                       std::string(line) + "\"");
    }
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (!trim(line.substr(pos)).empty()) {
    throw InputError("line " + std::to_string(line_no) + ": trailing content in \"" + std::string(line) + "\"");
  }
  return {vals[0], vals[1]};
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (auto t = trim(raw); !t.empty()) lines.emplace_back(t, line_no);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.empty()) throw InputError("empty graph document: missing \"n m\" header");

  const auto [n, m] = parse_pair(lines[0].first, lines[0].second);
  if (n < 0 || m < 0) throw InputError("header: n and m must be non-negative");
  if (n > 1'000'000) throw InputError("header: n too large");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw InputError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = parse_pair(lines[i].first, lines[i].second);
    if (u >= n || v >= n) {
      throw InputError("line " + std::to_string(lines[i].second) + ": endpoint out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw InputError("line " + std::to_string(lines[i].second) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace kwc

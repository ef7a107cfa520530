#include "dee/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <queue>

namespace dee {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph order must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge " + edge_str(u, v) + " out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge " + edge_str(dup->first, dup->second));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Parses exactly two non-negative decimal integers separated by one space.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos || sp == 0 || sp + 1 >= line.size()) return false;
  auto whole = [](std::string_view s, long long& out) {
    if (s.empty() || s.front() == '-' || s.front() == '+') return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  };
  return whole(line.substr(0, sp), a) && whole(line.substr(sp + 1), b);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header");

  long long n = 0, m = 0;
  if (!parse_pair(lines[0], n, m)) throw ParseError(1, "malformed header, expected \"<n> <m>\"");
  if (n < 1 || n > 1'000'000) throw ParseError(1, "vertex count out of range");
  if (m < 0 || m > n * (n - 1) / 2)
    throw ParseError(1, "edge count out of range");
  if (lines.size() - 1 < static_cast<std::size_t>(m))
    throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " edge lines");
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected content after edge list");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) {
    long long u = 0, v = 0;
    if (!parse_pair(lines[i], u, v)) throw ParseError(i + 1, "malformed edge, expected \"<u> <v>\"");
    if (u >= n || v >= n) throw ParseError(i + 1, "vertex index out of range");
    if (u == v) throw ParseError(i + 1, "self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    auto [it, fresh] = seen.emplace(e, i + 1);
    if (!fresh)
      throw ParseError(i + 1, "duplicate edge (first at line " + std::to_string(it->second) + ")");
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

bool is_connected(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  seen[0] = 1;
  frontier.push(0);
  int reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == g.order();
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path(n) requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star(n) requires n >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph chemical_tree_fig1() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}); }

namespace {

// Icosahedron: 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
// Row v lists v's five neighbours in counter-clockwise order seen from outside.
constexpr std::array<std::array<int, 5>, 12> kIcosahedronRotation{{
    {1, 2, 3, 4, 5},
    {0, 5, 10, 6, 2},
    {0, 1, 6, 7, 3},
    {0, 2, 7, 8, 4},
    {0, 3, 8, 9, 5},
    {0, 4, 9, 10, 1},
    {1, 10, 11, 7, 2},
    {2, 6, 11, 8, 3},
    {3, 7, 11, 9, 4},
    {4, 8, 11, 10, 5},
    {5, 9, 11, 6, 1},
    {6, 10, 9, 8, 7},
}};

}  // namespace

Graph c60_truncated_icosahedron() {
  // Truncation replaces vertex v by one new vertex per incident edge (v, w),
  // numbered 5*v + slot where w = rotation[v][slot].
  auto flag = [](int v, int w) {
    const auto& row = kIcosahedronRotation[v];
    auto slot = std::find(row.begin(), row.end(), w) - row.begin();
    return 5 * v + static_cast<int>(slot);
  };
  std::vector<Edge> edges;
  for (int v = 0; v < 12; ++v) {
    for (int slot = 0; slot < 5; ++slot) {
      // pentagon around v
      edges.emplace_back(5 * v + slot, 5 * v + (slot + 1) % 5);
      int w = kIcosahedronRotation[v][slot];
      if (v < w) edges.emplace_back(5 * v + slot, flag(w, v));
    }
  }
  return Graph(60, std::move(edges));
}

FamilyTag family_from_name(std::string_view name) {
  if (name == "complete") return FamilyTag::complete;
  if (name == "cycle") return FamilyTag::cycle;
  if (name == "path") return FamilyTag::path;
  if (name == "star") return FamilyTag::star;
  if (name == "tree5" || name == "chemical-tree") return FamilyTag::chemical_tree_fig1;
  if (name == "c60") return FamilyTag::c60;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::complete: return "complete";
    case FamilyTag::cycle: return "cycle";
    case FamilyTag::path: return "path";
    case FamilyTag::star: return "star";
    case FamilyTag::chemical_tree_fig1: return "tree5";
    case FamilyTag::c60: return "c60";
  }
  return "unknown";
}

bool family_takes_order(FamilyTag tag) {
  return tag != FamilyTag::chemical_tree_fig1 && tag != FamilyTag::c60;
}

Graph generate(const GraphFamily& family) {
  switch (family.tag) {
    case FamilyTag::complete: return complete_graph(family.n);
    case FamilyTag::cycle: return cycle_graph(family.n);
    case FamilyTag::path: return path_graph(family.n);
    case FamilyTag::star: return star_graph(family.n);
    case FamilyTag::chemical_tree_fig1: return chemical_tree_fig1();
    case FamilyTag::c60: return c60_truncated_icosahedron();
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace dee

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dee {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once each, smaller endpoint first, sorted
/// lexicographically. Construction rejects self-loops, duplicate edges and
/// out-of-range endpoints, so every Graph value is a valid simple graph.
/// Connectivity is not required here; downstream analysis checks it.
class Graph {
 public:
  /// Throws std::invalid_argument on n < 1 or an invalid edge.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbour lists, each sorted ascending.
  std::vector<std::vector<Vertex>> adjacency() const;

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Malformed graph-file content. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the "<n> <m>" header plus m "<u> <v>" lines format.
Graph parse_graph(std::string_view text);

/// Canonical text: header, sorted edges, single trailing newline.
std::string serialize_graph(const Graph& g);

bool is_connected(const Graph& g);

// Named families.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
/// The 5-vertex chemical tree 0-1-2-3 with a pendant 4 on vertex 2.
Graph chemical_tree_fig1();
/// Buckminsterfullerene: the truncated icosahedron, 60 vertices, 90 edges.
Graph c60_truncated_icosahedron();

enum class FamilyTag { complete, cycle, path, star, chemical_tree_fig1, c60 };

struct GraphFamily {
  FamilyTag tag;
  int n = 0;  // ignored by the two fixed graphs
};

/// Recognises "complete", "cycle", "path", "star", "tree5" (alias
/// "chemical-tree"), "c60". Throws std::invalid_argument otherwise.
FamilyTag family_from_name(std::string_view name);
std::string family_name(FamilyTag tag);
bool family_takes_order(FamilyTag tag);

/// Throws std::invalid_argument on a parameter outside the family's domain.
Graph generate(const GraphFamily& family);

}  // namespace dee

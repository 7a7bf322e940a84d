#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgering {

// An undirected edge {u, v}, stored with u < v. Vertex labels are 1-based.
using Edge = std::pair<int, int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A finite simple graph on the vertex set {1, ..., n}. The edge list is kept
// in canonical order (u < v within an edge, edges sorted lexicographically),
// which fixes the edge indexing used everywhere else: polytope vertex
// vectors, toric exponent vectors and the y_i serialization all refer to it.
class SimpleGraph {
 public:
  SimpleGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  // Index of {u, v} in the canonical edge list, or -1.
  int edge_index(int u, int v) const;

  bool connected() const;

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // adj_[v], v in 1..n
};

// One edge per line ("u v"), '#' starts a comment line, optional leading
// header line "n <k>" pins the vertex count (otherwise n = max label).
SimpleGraph parse_edge_list(std::istream& in);
SimpleGraph parse_edge_list(const std::string& text);

// A simple cycle, as its cyclic vertex sequence (no repeated vertices).
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool odd() const { return length() % 2 != 0; }
};

// A walk v_1, v_2, ..., v_k along edges of a graph.
struct Walk {
  std::vector<int> vertices;

  bool closed() const {
    return vertices.size() >= 2 && vertices.front() == vertices.back();
  }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Throws std::invalid_argument unless c is a simple cycle of g.
void validate_cycle(const SimpleGraph& g, const Cycle& c);

struct BipartiteProfile {
  int component_count = 0;
  int bipartite_component_count = 0;  // r(G)
  std::vector<std::vector<int>> components;
  // Two-coloring (0/1) for vertices of bipartite components, -1 elsewhere.
  std::vector<int> color;
  // Per component: an odd cycle when the component is not bipartite.
  std::vector<std::optional<Cycle>> odd_cycle_witness;
};

BipartiteProfile bipartite_components(const SimpleGraph& g);

// m - n + 1 (the circuit rank). Rejects disconnected input.
int cyclotomic_number(const SimpleGraph& g);

struct BlockDecomposition {
  // Each block is the set of edge indices of a maximal 2-connected subgraph
  // or of a single bridge edge; together they partition the edge set.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
  // Indices into `blocks` of the blocks with >= 2 edges (B_1, ..., B_s).
  std::vector<int> non_edge_blocks;

  int s() const { return static_cast<int>(non_edge_blocks.size()); }
};

BlockDecomposition block_decomposition(const SimpleGraph& g);

// All simple cycles of length <= max_length, one representative per
// rotation/reflection class, in deterministic order.
std::vector<Cycle> enumerate_cycles(const SimpleGraph& g, int max_length);

// Subgraph on the given vertices (relabeled 1..k in ascending label order)
// with every edge of g between them.
SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<int>& vertices);

// Shortest path between two vertex-disjoint cycles of g; its length is the
// connector length ell used by the classification.
Walk shortest_connector(const SimpleGraph& g, const Cycle& a, const Cycle& b);

// Canonical textual form ("n <k>" header plus one edge per line), parseable
// by parse_edge_list.
std::string to_edge_list_text(const SimpleGraph& g);

}  // namespace edgering

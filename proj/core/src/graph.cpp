#include "edgering/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

namespace edgering {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 1 || v < 1 || u > n || v > n)
      throw std::invalid_argument("vertex label out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_ + 1, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool SimpleGraph::connected() const {
  std::vector<bool> seen(n_ + 1, false);
  std::vector<int> stack = {1};
  seen[1] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count == n_;
}

SimpleGraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int declared_n = -1;
  int max_label = 0;
  std::string line;
  int lineno = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank / comment-only line
    if (!saw_content && first == "n") {
      long k;
      std::string rest;
      if (!(ls >> k) || (ls >> rest) || k < 1)
        throw ParseError(lineno, "malformed header line");
      declared_n = static_cast<int>(k);
      saw_content = true;
      continue;
    }
    saw_content = true;
    long u, v;
    std::string rest;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> rest))
      throw ParseError(lineno, "malformed line: expected \"u v\"");
    if (u < 1 || v < 1)
      throw ParseError(lineno, "vertex label must be >= 1");
    if (u == v) throw ParseError(lineno, "loop edge " + std::to_string(u));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError(lineno, "duplicate edge {" + std::to_string(e.first) +
                                   "," + std::to_string(e.second) + "}");
    max_label = std::max(max_label, e.second);
    edges.push_back(e);
  }
  int n = declared_n > 0 ? declared_n : max_label;
  if (n == 0) throw ParseError(lineno == 0 ? 1 : lineno, "empty edge list");
  if (declared_n > 0 && max_label > declared_n)
    throw ParseError(lineno, "vertex label exceeds declared n");
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void validate_cycle(const SimpleGraph& g, const Cycle& c) {
  int len = c.length();
  if (len < 3) throw std::invalid_argument("cycle must have length >= 3");
  std::set<int> distinct(c.vertices.begin(), c.vertices.end());
  if (static_cast<int>(distinct.size()) != len)
    throw std::invalid_argument("cycle vertices must be distinct");
  for (int i = 0; i < len; ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % len];
    if (u < 1 || u > g.vertex_count() || !g.adjacent(u, v))
      throw std::invalid_argument("cycle edge not present in graph");
  }
}

BipartiteProfile bipartite_components(const SimpleGraph& g) {
  int n = g.vertex_count();
  BipartiteProfile profile;
  profile.color.assign(n + 1, -1);
  std::vector<int> comp(n + 1, -1), depth(n + 1, -1), parent(n + 1, 0);
  for (int root = 1; root <= n; ++root) {
    if (comp[root] != -1) continue;
    int c = profile.component_count++;
    std::vector<int> members;
    std::vector<int> queue = {root};
    comp[root] = c;
    depth[root] = 0;
    parent[root] = 0;
    std::optional<Cycle> witness;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = c;
          depth[w] = depth[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (!witness && w != parent[v] &&
                   (depth[v] - depth[w]) % 2 == 0) {
          // Same BFS parity: tree paths to the meeting point plus {v,w}
          // close an odd cycle.
          std::vector<int> up_v, up_w;
          int a = v, b = w;
          while (depth[a] > depth[b]) up_v.push_back(a), a = parent[a];
          while (depth[b] > depth[a]) up_w.push_back(b), b = parent[b];
          while (a != b) {
            up_v.push_back(a), a = parent[a];
            up_w.push_back(b), b = parent[b];
          }
          up_v.push_back(a);
          Cycle cyc;
          cyc.vertices = up_v;
          for (auto it = up_w.rbegin(); it != up_w.rend(); ++it)
            cyc.vertices.push_back(*it);
          std::reverse(cyc.vertices.begin(), cyc.vertices.end());
          validate_cycle(g, cyc);
          if (cyc.length() % 2 == 0)
            throw std::logic_error("odd-cycle witness has even length");
          witness = std::move(cyc);
        }
      }
    }
    std::sort(members.begin(), members.end());
    if (!witness) {
      ++profile.bipartite_component_count;
      for (int v : members) profile.color[v] = depth[v] % 2;
    }
    profile.components.push_back(std::move(members));
    profile.odd_cycle_witness.push_back(std::move(witness));
  }
  return profile;
}

int cyclotomic_number(const SimpleGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("cyclotomic number requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

namespace {

struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<bool> is_cut;
  std::vector<int> edge_stack;  // edge indices
  BlockDecomposition out;
  int timer = 0;

  explicit BlockFinder(const SimpleGraph& graph)
      : g(graph),
        disc(graph.vertex_count() + 1, 0),
        low(graph.vertex_count() + 1, 0),
        is_cut(graph.vertex_count() + 1, false) {}

  void pop_block(int until_edge) {
    std::vector<int> block;
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until_edge) break;
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }

  void dfs(int v, int parent_edge) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (int w : g.neighbors(v)) {
      int e = g.edge_index(v, w);
      if (e == parent_edge) continue;
      if (disc[w] == 0) {
        ++children;
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (disc[v] > 1 || children > 1) is_cut[v] = true;
          pop_block(e);
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const SimpleGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("block decomposition requires a connected graph");
  BlockFinder finder(g);
  finder.dfs(1, -1);
  BlockDecomposition result = std::move(finder.out);
  std::sort(result.blocks.begin(), result.blocks.end());
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (finder.is_cut[v]) result.cut_vertices.push_back(v);
  for (int i = 0; i < static_cast<int>(result.blocks.size()); ++i)
    if (result.blocks[i].size() >= 2) result.non_edge_blocks.push_back(i);
  return result;
}

std::vector<Cycle> enumerate_cycles(const SimpleGraph& g, int max_length) {
  if (max_length < 3)
    throw std::invalid_argument("max_length must be >= 3");
  std::vector<Cycle> cycles;
  int n = g.vertex_count();
  std::vector<bool> on_path(n + 1, false);
  std::vector<int> path;

  // Each cycle is generated once: rooted at its least vertex, with the
  // reflection fixed by path[1] < path.back().
  std::function<void(int, int)> extend = [&](int root, int v) {
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(Cycle{path});
      } else if (w > root && !on_path[w] &&
                 static_cast<int>(path.size()) < max_length) {
        on_path[w] = true;
        path.push_back(w);
        extend(root, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (int root = 1; root <= n; ++root) {
    path = {root};
    on_path[root] = true;
    extend(root, root);
    on_path[root] = false;
  }
  return cycles;
}

SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("vertex set must be nonempty");
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> label(g.vertex_count() + 1, 0);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 1 || vs[i] > g.vertex_count())
      throw std::invalid_argument("vertex outside graph");
    label[vs[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (label[u] && label[v]) edges.emplace_back(label[u], label[v]);
  return SimpleGraph(static_cast<int>(vs.size()), std::move(edges));
}

std::string to_edge_list_text(const SimpleGraph& g) {
  std::string text = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    text += std::to_string(u) + " " + std::to_string(v) + "\n";
  return text;
}

Walk shortest_connector(const SimpleGraph& g, const Cycle& a, const Cycle& b) {
  validate_cycle(g, a);
  validate_cycle(g, b);
  std::vector<bool> in_a(g.vertex_count() + 1, false),
      in_b(g.vertex_count() + 1, false);
  for (int v : a.vertices) in_a[v] = true;
  for (int v : b.vertices) {
    if (in_a[v])
      throw std::invalid_argument("cycles must be vertex-disjoint");
    in_b[v] = true;
  }
  // Multi-source BFS from a's vertices.
  std::vector<int> parent(g.vertex_count() + 1, -1);
  std::vector<int> queue;
  for (int v : a.vertices) {
    parent[v] = 0;
    queue.push_back(v);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    if (in_b[v]) {
      Walk walk;
      for (int w = v; w != 0; w = parent[w]) walk.vertices.push_back(w);
      std::reverse(walk.vertices.begin(), walk.vertices.end());
      return walk;
    }
    for (int w : g.neighbors(v))
      if (parent[w] == -1) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  throw std::invalid_argument("no path between the two cycles");
}

}  // namespace edgering

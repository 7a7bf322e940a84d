#pragma once

#include <climits>
#include <cstdint>
#include <vector>

namespace edgering {

// Dinic max-flow on a tiny fixed node set, with integer capacities. Built
// once, re-run many times with fresh capacities (lattice point filtering
// calls this millions of times, so no per-query allocation).
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  int add_edge(int from, int to, long long cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    next_.push_back(head_[from]);
    head_[from] = id;
    cap_.push_back(cap);
    to_.push_back(from);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    cap_.push_back(0);
    return id;
  }

  // Resets the reverse arc; call for every arc before each run.
  void set_capacity(int edge_id, long long cap) {
    cap_[edge_id] = cap;
    cap_[edge_id ^ 1] = 0;
  }

  long long run(int source, int sink);

 private:
  bool bfs(int source, int sink);
  long long dfs(int v, int sink, long long pushed);

  std::vector<int> head_, to_, next_;
  std::vector<long long> cap_;
  std::vector<int> level_, it_, bfs_queue_;
};

}  // namespace edgering

#pragma once

#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

// All connected simple graphs on n vertices (1 <= n <= 8), exactly one per
// isomorphism class: canonical form is the lexicographically least adjacency
// bitstring over all vertex permutations. Deterministic order (edge count,
// then canonical bitstring).
std::vector<SimpleGraph> enumerate_connected_graphs(int n);

struct Limits {
  int fiber_max_degree = 0;  // 0: use the default n + 1
  long long fiber_work = 100'000'000;
  long long lattice_candidates = 100'000'000;
  int polytope_max_vertices = 7;  // skip polytope checks above this
  int codegree_max_vertices = 6;  // the interior-point search is LP-heavy
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;  // failure diagnostics or skip reason
};

// Runs every classification/toric/polytope invariant against one graph.
// Budget-limited checks come back as Skip, never as Pass.
std::vector<CheckResult> consistency_suite(const SimpleGraph& g,
                                           const Limits& limits = {});

struct SweepReport {
  int n_max = 0;
  Limits limits;
  std::vector<int> graph_counts;  // index k: graphs on k+1 vertices

  struct CheckTotals {
    std::string name;
    long long pass = 0, fail = 0, skip = 0;
  };
  std::vector<CheckTotals> totals;  // fixed check order

  struct Certificate {
    std::string check;
    std::string edge_list;  // canonical text, replayable
    std::string detail;
  };
  std::vector<Certificate> failures;

  bool ok() const { return failures.empty(); }
  int total_graphs() const;
  std::string summary() const;  // human-readable table
};

SweepReport sweep(int n_max, const Limits& limits = {});

// Re-runs the suite on a recorded certificate; true when the named check
// still fails.
bool replay_certificate(const SweepReport::Certificate& cert,
                        const Limits& limits = {});

}  // namespace edgering

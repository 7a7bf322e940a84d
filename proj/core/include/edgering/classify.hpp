#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

// K[G] is a polynomial ring iff G is a tree (a) or unicyclic with an odd
// cycle (b).
std::optional<char> simplex_case(const SimpleGraph& g);

// The three block shapes with codim K[G] = 1. Detection cross-checks the
// edge-count characterization (m = n bipartite / n+1 otherwise) against the
// block structure and aborts on disagreement.
struct HypersurfaceShape {
  char case_tag;                // 'a', 'b' or 'c'
  std::vector<int> block_ids;   // indices of the witnessing non-edge blocks
};
std::optional<HypersurfaceShape> hypersurface_case(const SimpleGraph& g);

// 2-linear detection: (i) the 2-core is a complete bipartite K_{2,delta};
// (ii) non-bipartite and one edge removal leaves a clause-(i) graph.
struct TwoLinearShape {
  std::string clause;  // "i" or "ii"
  int delta;
  int removed_edge;  // edge index for clause (ii), -1 otherwise
};
std::optional<TwoLinearShape> classify_two_linear(const SimpleGraph& g);

// q-linear detection for q >= 3, per non-edge block structure.
struct QLinearShape {
  int q;
  std::string case_tag;      // "i".."v"
  int even_cycle_length = 0;  // cases i-iii
  int r1 = 0, r2 = 0;         // odd block lengths, cases iv/v
  int ell = 0;                // connector length, case v
};
std::optional<QLinearShape> classify_q_linear(const SimpleGraph& g);

enum class Verdict { PolynomialRing, TwoLinear, QLinear, NoLinearResolution };

struct Classification {
  Verdict verdict;
  std::string case_tag;  // theorem clause that fired, empty for no-resolution
  int q = 0;             // 2 for TwoLinear, the q for QLinear, else 0
  int delta = 0;         // the delta of K_{2,delta} for TwoLinear
  int non_edge_blocks = 0;
  QLinearShape q_shape{};  // populated for QLinear verdicts
};

std::string to_string(const Classification& c);

// Combined decision: PolynomialRing, else TwoLinear, else QLinear(q >= 3),
// else NoLinearResolution. Enforces that every QLinear verdict also passes
// the hypersurface test (aborts otherwise).
Classification classify(const SimpleGraph& g);

}  // namespace edgering

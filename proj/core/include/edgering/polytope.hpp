#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"

namespace edgering {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The edge polytope P_G = conv{ rho(e) : e in E(G) }, rho({i,j}) = e_i + e_j.
struct EdgePolytope {
  int ambient_dim = 0;  // n
  // One 0/1 vector per edge, canonical edge order. Exactly two ones each.
  std::vector<std::vector<int>> vertex_vectors;
  int dim = 0;  // n - r(G) - 1, cross-checked against the affine rank
  // The source edges {i,j} (1-based), same order as vertex_vectors.
  std::vector<Edge> edge_pairs;
  // 0/1 vertex classes when the source graph is bipartite, else empty.
  std::vector<int> bipartition;
};

// Requires a connected graph; aborts (std::logic_error) if the dimension
// formula and the computed affine rank of the vertex vectors disagree.
EdgePolytope edge_polytope(const SimpleGraph& g);

using RationalPoint = std::vector<Rat>;

// Membership x in t*P: exists lambda >= 0 with sum lambda = t and
// sum lambda_e rho(e) = x. Integral queries are decided by an exact integer
// max-flow on the bipartite double cover (provably equivalent, see the
// implementation note); general rational queries run the exact phase-1
// simplex LP.
bool contains(const EdgePolytope& p, const RationalPoint& x, const Rat& t);

// The pure simplex route, regardless of integrality. contains() and this
// always agree; tests exercise the equivalence.
bool contains_lp(const EdgePolytope& p, const RationalPoint& x, const Rat& t);

// Relative-interior membership: exists lambda with every lambda_e > 0,
// sum lambda = t, sum lambda_e rho(e) = x. Decided by maximizing eps subject
// to lambda_e >= eps via the exact rational LP and testing optimum > 0.
// Rests on relint(conv V) = { strictly positive convex combinations of V },
// valid because every rho(e) is a vertex of P_G.
bool relint_contains(const EdgePolytope& p, const RationalPoint& x,
                     const Rat& t);

struct WorkBudget {
  long long max_candidates = 100'000'000;  // lattice enumeration cap
};

// |t P  cap  Z^n|, by enumerating all x >= 0 with sum x = 2t, x_i <= t and
// filtering through the membership test. Throws BudgetExceeded when the
// candidate count would exceed the budget.
Int lattice_point_count(const EdgePolytope& p, int t,
                        const WorkBudget& budget = {});

struct EhrhartTable {
  std::vector<Int> counts;  // counts[t] = |tP cap Z^n| for t = 0..T
  int max_dilation() const { return static_cast<int>(counts.size()) - 1; }
};

EhrhartTable ehrhart_table(const EdgePolytope& p, int max_dilation,
                           const WorkBudget& budget = {});

struct DeltaPolynomial {
  std::vector<Int> coefficients;  // delta_0 .. delta_d
  int degree = 0;                 // largest i with delta_i != 0
  int codegree = 0;               // d + 1 - degree
};

// delta_i = sum_{j<=i} (-1)^j C(d+1, j) L(i-j). Negative coefficients signal
// an arithmetic or membership bug and abort via std::logic_error.
DeltaPolynomial delta_polynomial(const EdgePolytope& p,
                                 const WorkBudget& budget = {});
DeltaPolynomial delta_from_table(const EdgePolytope& p,
                                 const EhrhartTable& table);

// Vanishing of the (d+1)-st finite difference of L at 0; the table must
// reach dilation d+1.
bool ehrhart_difference_vanishes(const EdgePolytope& p,
                                 const EhrhartTable& table);

// Smallest r >= 1 such that int(rP) contains a lattice point (r <= d+1).
int codegree_by_search(const EdgePolytope& p, const WorkBudget& budget = {});

// The interior witness of an even cycle C of length 2r: the all-ones vector
// on V(C) (zero elsewhere) together with the dilation r. relint_contains
// accepts it for the cycle's own polytope.
std::pair<RationalPoint, int> even_cycle_interior_witness(const Cycle& c,
                                                          int ambient_n = 0);

}  // namespace edgering

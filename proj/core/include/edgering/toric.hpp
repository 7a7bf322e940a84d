#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"

namespace edgering {

// A binomial y^plus - y^minus of the toric ideal I_G, exponents indexed by
// the canonical edge order, reduced to lowest terms (disjoint supports) and
// sign-normalized so that plus is the lex-greater monomial.
struct Binomial {
  std::vector<int> plus;
  std::vector<int> minus;
  int degree = 0;      // common total degree of both monomials
  bool trivial = false;  // plus == minus after reduction (the zero binomial)

  bool operator==(const Binomial& o) const {
    return plus == o.plus && minus == o.minus;
  }
};

// f_Gamma for a closed even walk: odd-position edges to one monomial,
// even-position edges to the other. Rejects open or odd-length walks.
Binomial walk_binomial(const SimpleGraph& g, const Walk& w);

// "y1*y3 - y2*y4" with 1-based edge indices; exponent k > 1 prints as y3^k.
std::string to_string(const Binomial& b);

// Every even closed walk of length <= 2*max_degree that can carry a minimal
// generator: an even cycle; two odd cycles sharing exactly one vertex; or
// two vertex-disjoint odd cycles joined by two paths, each vertex visited at
// most twice. Deduplicated up to starting point and direction.
std::vector<Walk> primitive_walk_candidates(const SimpleGraph& g,
                                            int max_degree);

struct FiberBudget {
  long long max_work = 100'000'000;  // elementary fiber steps per call
};

struct GeneratorProfile {
  std::vector<Binomial> generators;     // a minimal generating set, degrees <=
                                        // max_degree_processed
  std::map<int, int> degree_histogram;  // degree -> count
  int codimension = 0;                  // m - n + r(G)
  // True when every degree up to the safe bound (generators of I_G have
  // degree at most n, since primitive even closed walks visit each vertex at
  // most twice) was fully processed.
  bool complete = false;
  int max_degree_processed = 0;
};

// Ground-truth minimal generators of I_G in degrees <= max_degree, by fiber
// connectivity under lower-degree moves. Deterministic: fibers are processed
// in increasing multidegree order and connectors are chosen lex-least.
GeneratorProfile minimal_generators(const SimpleGraph& g, int max_degree,
                                    const FiberBudget& budget = {});

// C(c+q-1, c-1): the least number of generators an ideal with codimension c
// and a q-linear resolution can have.
Int eg_lower_bound(int c, int q);

}  // namespace edgering

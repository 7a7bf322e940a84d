#include <doctest.h>

#include <random>

#include "edgering/oracle.hpp"
#include "edgering/polytope.hpp"

using namespace edgering;

namespace {

SimpleGraph cycle(int len) {
  std::vector<Edge> edges;
  for (int i = 1; i < len; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, len});
  return SimpleGraph(len, edges);
}

SimpleGraph triangle() { return cycle(3); }

SimpleGraph k23() {
  return SimpleGraph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

SimpleGraph bowtie() {
  return SimpleGraph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
}

RationalPoint pt(std::vector<long> coords) {
  RationalPoint x;
  for (long c : coords) x.emplace_back(c);
  return x;
}

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("edge polytope structure") {
  EdgePolytope k3 = edge_polytope(triangle());
  CHECK(k3.vertex_vectors.size() == 3);
  CHECK(k3.dim == 2);
  CHECK(k3.vertex_vectors[0] == std::vector<int>{1, 1, 0});
  CHECK(k3.vertex_vectors[1] == std::vector<int>{1, 0, 1});
  CHECK(k3.vertex_vectors[2] == std::vector<int>{0, 1, 1});

  CHECK(edge_polytope(cycle(4)).dim == 2);
  CHECK(edge_polytope(k23()).dim == 3);
  for (const auto& v : edge_polytope(k23()).vertex_vectors) {
    int ones = 0;
    for (int c : v) ones += c;
    CHECK(ones == 2);
  }

  SimpleGraph disconnected(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(edge_polytope(disconnected), std::invalid_argument);
}

TEST_CASE("membership") {
  EdgePolytope c4 = edge_polytope(cycle(4));
  CHECK(contains(c4, pt({1, 1, 1, 1}), 2));
  CHECK_FALSE(contains(c4, pt({2, 0, 0, 0}), 1));
  EdgePolytope k3 = edge_polytope(triangle());
  CHECK(contains(k3, pt({1, 1, 2}), 2));
  CHECK_FALSE(contains(k3, pt({2, 1, 1}), 1));  // wrong total

  // rational query (runs the LP route)
  RationalPoint mid = {Rat(1, 2), Rat(1, 2), Rat(1)};
  CHECK(contains(k3, mid, 1));
  RationalPoint off = {Rat(3, 2), Rat(1, 2), Rat(0)};
  CHECK_FALSE(contains(k3, off, 1));
}

TEST_CASE("flow and simplex membership routes agree") {
  for (const SimpleGraph& g : {triangle(), cycle(4), k23(), bowtie()}) {
    EdgePolytope p = edge_polytope(g);
    int n = g.vertex_count();
    std::mt19937 rng(42);
    for (int t = 1; t <= 3; ++t) {
      for (int trial = 0; trial < 200; ++trial) {
        RationalPoint x(n);
        long sum = 0;
        for (int i = 0; i < n; ++i) {
          long v = rng() % (t + 1);
          x[i] = Rat(v);
          sum += v;
        }
        if (sum != 2 * t) continue;
        CHECK(contains(p, x, t) == contains_lp(p, x, t));
      }
    }
  }
}

TEST_CASE("relative interior") {
  EdgePolytope c6 = edge_polytope(cycle(6));
  CHECK(relint_contains(c6, pt({1, 1, 1, 1, 1, 1}), 3));

  EdgePolytope c4 = edge_polytope(cycle(4));
  CHECK_FALSE(relint_contains(c4, pt({1, 1, 0, 0}), 1));  // a vertex
  CHECK(relint_contains(c4, pt({1, 1, 1, 1}), 2));

  // rational dilation: the barycenter of P_K3 at t = 3/2
  EdgePolytope k3 = edge_polytope(triangle());
  CHECK(relint_contains(k3, pt({1, 1, 1}), Rat(3, 2)));
  CHECK_FALSE(relint_contains(k3, pt({1, 1, 0}), 1));
}

TEST_CASE("lattice point counts") {
  EdgePolytope k3 = edge_polytope(triangle());
  CHECK(lattice_point_count(k3, 1) == 3);
  CHECK(lattice_point_count(k3, 2) == 6);

  EdgePolytope c4 = edge_polytope(cycle(4));
  for (int t = 1; t <= 4; ++t)
    CHECK(lattice_point_count(c4, t) == Int((t + 1) * (t + 1)));

  CHECK_THROWS_AS(lattice_point_count(k3, 0), std::invalid_argument);
}

TEST_CASE("lattice enumeration budget") {
  EdgePolytope c8 = edge_polytope(cycle(8));
  WorkBudget tiny{10};
  CHECK_THROWS_AS(lattice_point_count(c8, 3, tiny), BudgetExceeded);
}

TEST_CASE("delta polynomials of the named graphs") {
  struct Golden {
    SimpleGraph g;
    std::vector<long> delta;
    int degree, codegree;
    std::vector<long> ehrhart;  // L(0..d+1)
  };
  std::vector<Golden> goldens;
  goldens.push_back({triangle(), {1, 0, 0}, 0, 3, {1, 3, 6, 10}});
  goldens.push_back({cycle(4), {1, 1, 0}, 1, 2, {1, 4, 9, 16}});
  goldens.push_back({cycle(6), {1, 1, 1, 0, 0}, 2, 3, {1, 6, 21, 55, 120, 231}});
  goldens.push_back({cycle(8),
                     {1, 1, 1, 1, 0, 0, 0},
                     3,
                     4,
                     {1, 8, 36, 120, 329, 784, 1680, 3312}});
  goldens.push_back({k23(), {1, 2, 0, 0}, 1, 3, {1, 6, 18, 40, 75}});
  goldens.push_back(
      {bowtie(), {1, 1, 1, 0, 0}, 2, 3, {1, 6, 21, 55, 120, 231}});
  goldens.push_back({SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                     {3, 4}}),
                     {1, 2, 1, 0},
                     2,
                     2,
                     {1, 6, 19, 44, 85}});
  // two triangles joined by a path of length 2
  goldens.push_back({SimpleGraph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5},
                                     {5, 6}, {6, 7}, {5, 7}}),
                     {1, 1, 1, 2, 0, 0, 0},
                     3,
                     4,
                     {1, 8, 36, 121, 336, 812, 1764, 3522}});
  for (const Golden& gold : goldens) {
    EdgePolytope p = edge_polytope(gold.g);
    EhrhartTable table = ehrhart_table(p, p.dim + 1);
    CHECK(table.counts == ints(gold.ehrhart));
    DeltaPolynomial delta = delta_from_table(p, table);
    CHECK(delta.coefficients == ints(gold.delta));
    CHECK(delta.degree == gold.degree);
    CHECK(delta.codegree == gold.codegree);
    CHECK(ehrhart_difference_vanishes(p, table));
    CHECK(codegree_by_search(p) == gold.codegree);
  }
}

TEST_CASE("single edge gives a point polytope") {
  SimpleGraph edge(2, {{1, 2}});
  EdgePolytope p = edge_polytope(edge);
  CHECK(p.dim == 0);
  DeltaPolynomial delta = delta_polynomial(p);
  CHECK(delta.coefficients == ints({1}));
  CHECK(delta.degree == 0);
  CHECK(delta.codegree == 1);
  CHECK(codegree_by_search(p) == 1);
  CHECK(relint_contains(p, pt({1, 1}), 1));
}

TEST_CASE("even cycle interior witness") {
  for (int len : {4, 6, 8}) {
    SimpleGraph g = cycle(len);
    Cycle c;
    for (int v = 1; v <= len; ++v) c.vertices.push_back(v);
    auto [x, r] = even_cycle_interior_witness(c);
    CHECK(r == len / 2);
    CHECK(relint_contains(edge_polytope(g), x, r));
  }
  Cycle tri{{1, 2, 3}};
  CHECK_THROWS_AS(even_cycle_interior_witness(tri), std::invalid_argument);
}

TEST_CASE("delta sanity and codegree agreement across all graphs on <= 5 "
          "vertices") {
  for (int n = 2; n <= 5; ++n) {
    for (const SimpleGraph& g : enumerate_connected_graphs(n)) {
      EdgePolytope p = edge_polytope(g);
      EhrhartTable table = ehrhart_table(p, p.dim + 1);
      CHECK(table.counts[1] == g.edge_count());
      DeltaPolynomial delta = delta_from_table(p, table);
      CHECK(delta.coefficients[0] == 1);
      if (p.dim >= 1)
        CHECK(delta.coefficients[1] == g.edge_count() - p.dim - 1);
      CHECK(ehrhart_difference_vanishes(p, table));
      CHECK(codegree_by_search(p) == delta.codegree);
    }
  }
}

TEST_CASE("degree monotonicity for nested cycles with trees") {
  // C6 is a subgraph of C6 plus a pendant edge
  SimpleGraph c6p(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 7}});
  DeltaPolynomial inner = delta_polynomial(edge_polytope(cycle(6)));
  DeltaPolynomial outer = delta_polynomial(edge_polytope(c6p));
  CHECK(inner.degree <= outer.degree);
  CHECK(outer.degree == 2);
}

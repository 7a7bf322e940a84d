#include <doctest.h>

#include "edgering/classify.hpp"
#include "edgering/oracle.hpp"
#include "edgering/toric.hpp"

using namespace edgering;

namespace {

SimpleGraph cycle(int len) {
  std::vector<Edge> edges;
  for (int i = 1; i < len; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, len});
  return SimpleGraph(len, edges);
}

SimpleGraph k23() {
  return SimpleGraph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

SimpleGraph bowtie() {
  return SimpleGraph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
}

SimpleGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 5; ++i) edges.push_back({i, i % 5 + 1});
  for (int i = 1; i <= 5; ++i) edges.push_back({i, i + 5});
  edges.push_back({6, 8});
  edges.push_back({8, 10});
  edges.push_back({10, 7});
  edges.push_back({7, 9});
  edges.push_back({9, 6});
  return SimpleGraph(10, edges);
}

}  // namespace

TEST_CASE("polynomial ring cases") {
  SimpleGraph p5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(simplex_case(p5) == 'a');

  SimpleGraph tri_pendant(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  CHECK(simplex_case(tri_pendant) == 'b');

  CHECK_FALSE(simplex_case(cycle(4)).has_value());
  SimpleGraph disconnected(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(simplex_case(disconnected), std::invalid_argument);
}

TEST_CASE("hypersurface shapes") {
  // C6 with trees attached
  SimpleGraph c6_trees(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                           {2, 7}, {7, 8}, {4, 9}});
  auto a = hypersurface_case(c6_trees);
  REQUIRE(a.has_value());
  CHECK(a->case_tag == 'a');

  auto c = hypersurface_case(bowtie());
  REQUIRE(c.has_value());
  CHECK(c->case_tag == 'c');
  CHECK(c->block_ids.size() == 2);

  // non-bipartite theta: even 4-cycle plus a path making odd cycles
  SimpleGraph theta(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
  auto b = hypersurface_case(theta);
  REQUIRE(b.has_value());
  CHECK(b->case_tag == 'b');

  CHECK_FALSE(hypersurface_case(k23()).has_value());
  CHECK_FALSE(hypersurface_case(cycle(3)).has_value());
}

TEST_CASE("two-linear classification") {
  // C4 with a pendant path of length 2: clause (i), delta = 2
  SimpleGraph c4_path(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}});
  auto r = classify_two_linear(c4_path);
  REQUIRE(r.has_value());
  CHECK(r->clause == "i");
  CHECK(r->delta == 2);

  auto k = classify_two_linear(k23());
  REQUIRE(k.has_value());
  CHECK(k->clause == "i");
  CHECK(k->delta == 3);

  // K23 plus one edge inside the 3-side: clause (ii), delta = 3
  SimpleGraph k23_plus(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                           {3, 4}});
  auto p = classify_two_linear(k23_plus);
  REQUIRE(p.has_value());
  CHECK(p->clause == "ii");
  CHECK(p->delta == 3);

  CHECK_FALSE(classify_two_linear(cycle(6)).has_value());
  CHECK_FALSE(classify_two_linear(
                  SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                  {3, 4}}))
                  .has_value());  // K4
}

TEST_CASE("q-linear classification") {
  auto c6 = classify_q_linear(cycle(6));
  REQUIRE(c6.has_value());
  CHECK(c6->q == 3);
  CHECK(c6->case_tag == "i");

  // trees hanging off the hexagon keep case (i)
  SimpleGraph c6_tree(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                          {3, 7}, {7, 8}});
  auto ct = classify_q_linear(c6_tree);
  REQUIRE(ct.has_value());
  CHECK(ct->q == 3);
  CHECK(ct->case_tag == "i");

  auto bt = classify_q_linear(bowtie());
  REQUIRE(bt.has_value());
  CHECK(bt->q == 3);
  CHECK(bt->case_tag == "iv");
  CHECK(bt->r1 + bt->r2 == 6);

  // two triangles joined by a path of length 2: q = 5, case (v)
  SimpleGraph joined(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6},
                         {6, 7}, {5, 7}});
  auto j = classify_q_linear(joined);
  REQUIRE(j.has_value());
  CHECK(j->q == 5);
  CHECK(j->case_tag == "v");
  CHECK(j->ell == 2);

  // hexagon plus a triangle at a cut vertex: case (iii)
  SimpleGraph mixed(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                        {1, 7}, {7, 8}, {1, 8}});
  auto mx = classify_q_linear(mixed);
  REQUIRE(mx.has_value());
  CHECK(mx->q == 3);
  CHECK(mx->case_tag == "iii");

  // C6 plus the chord {1,4} is theta(3,3,1): all path parities equal, so it
  // stays bipartite and cannot be case (ii)
  SimpleGraph theta331(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                           {1, 4}});
  CHECK_FALSE(classify_q_linear(theta331).has_value());

  // theta(2,4,1): paths of lengths 2, 4, 1 between the branch vertices give
  // cycles 6, 3, 5 -- non-bipartite with a unique even cycle: case (ii)
  SimpleGraph theta241(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {5, 6},
                           {2, 6}});
  auto th = classify_q_linear(theta241);
  REQUIRE(th.has_value());
  CHECK(th->q == 3);
  CHECK(th->case_tag == "ii");

  CHECK_FALSE(classify_q_linear(cycle(4)).has_value());
  CHECK_FALSE(classify_q_linear(k23()).has_value());
}

TEST_CASE("combined classification") {
  Classification k = classify(k23());
  CHECK(k.verdict == Verdict::TwoLinear);
  CHECK(k.case_tag == "i");
  CHECK(k.delta == 3);
  CHECK(to_string(k) == "2-linear (case i, delta=3)");

  Classification c8 = classify(cycle(8));
  CHECK(c8.verdict == Verdict::QLinear);
  CHECK(c8.q == 4);
  CHECK(c8.case_tag == "i");
  CHECK(to_string(c8) == "q-linear (q=4, case i)");

  Classification bt = classify(bowtie());
  CHECK(to_string(bt) == "q-linear (q=3, case iv)");

  Classification tri = classify(cycle(3));
  CHECK(tri.verdict == Verdict::PolynomialRing);
  CHECK(to_string(tri) == "polynomial ring (case b)");

  // two hexagons glued at a vertex: fails every clause
  SimpleGraph two_hex(11, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                           {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11},
                           {6, 11}});
  Classification th = classify(two_hex);
  CHECK(th.verdict == Verdict::NoLinearResolution);
  CHECK(to_string(th) == "no linear resolution");

  Classification pet = classify(petersen());
  CHECK(pet.verdict == Verdict::NoLinearResolution);
}

TEST_CASE("theta blocks with a square even cycle stay 2-linear") {
  // K4 minus an edge = theta(1,2,2): hypersurface with a degree-2 generator
  SimpleGraph diamond(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
  CHECK(hypersurface_case(diamond).has_value());
  CHECK_FALSE(classify_q_linear(diamond).has_value());
  Classification c = classify(diamond);
  CHECK(c.verdict == Verdict::TwoLinear);
  CHECK(c.case_tag == "ii");
  CHECK(c.delta == 2);
}

TEST_CASE("verdicts agree with the generator oracle on showcase graphs") {
  struct Expect {
    SimpleGraph g;
    Verdict verdict;
    int q;  // generator degree for linear verdicts
  };
  std::vector<Expect> table;
  table.push_back({cycle(6), Verdict::QLinear, 3});
  table.push_back({bowtie(), Verdict::QLinear, 3});
  table.push_back({k23(), Verdict::TwoLinear, 2});
  table.push_back({cycle(4), Verdict::TwoLinear, 2});
  for (const Expect& e : table) {
    Classification c = classify(e.g);
    CHECK(c.verdict == e.verdict);
    GeneratorProfile prof = minimal_generators(e.g, e.g.vertex_count() + 1);
    REQUIRE(prof.complete);
    for (const Binomial& b : prof.generators) CHECK(b.degree == e.q);
  }
}

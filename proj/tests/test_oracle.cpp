#include <doctest.h>

#include <algorithm>
#include <set>

#include "edgering/oracle.hpp"

using namespace edgering;

namespace {

int count_fails(const std::vector<CheckResult>& results) {
  int fails = 0;
  for (const CheckResult& r : results) fails += r.status == CheckStatus::Fail;
  return fails;
}

const CheckResult& find_check(const std::vector<CheckResult>& results,
                              const std::string& name) {
  for (const CheckResult& r : results)
    if (r.name == name) return r;
  throw std::runtime_error("check not found: " + name);
}

// Independent canonicalization: brute force over all n! permutations.
std::string naive_canonical(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) adj[u - 1][v - 1] = adj[v - 1][u - 1] = true;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s.push_back(adj[perm[i]][perm[j]] ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("enumeration counts match the known census") {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_connected_graphs(n).size() ==
          static_cast<size_t>(expected[n - 1]));
  CHECK_THROWS_AS(enumerate_connected_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected_graphs(9), std::invalid_argument);
}

TEST_CASE("enumeration closure against labeled brute force, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    std::set<std::string> classes;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if ((mask >> bit) & 1) edges.push_back({i, j});
          ++bit;
        }
      SimpleGraph g(n, edges);
      if (!g.connected()) continue;
      classes.insert(naive_canonical(n, g.edges()));
    }
    std::vector<SimpleGraph> enumerated = enumerate_connected_graphs(n);
    CHECK(enumerated.size() == classes.size());
    std::set<std::string> ours;
    for (const SimpleGraph& g : enumerated)
      ours.insert(naive_canonical(n, g.edges()));
    CHECK(ours == classes);
  }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  std::vector<SimpleGraph> a = enumerate_connected_graphs(6);
  std::vector<SimpleGraph> b = enumerate_connected_graphs(6);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  std::set<std::string> texts;
  for (const SimpleGraph& g : a) texts.insert(to_edge_list_text(g));
  CHECK(texts.size() == a.size());
}

TEST_CASE("consistency suite: K23") {
  SimpleGraph g(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  std::vector<CheckResult> results = consistency_suite(g);
  CHECK(count_fails(results) == 0);
  CHECK(find_check(results, "twolinear-generators").status ==
        CheckStatus::Pass);
  CHECK(find_check(results, "eg-bound").status == CheckStatus::Pass);
  CHECK(find_check(results, "codegree-agreement").status == CheckStatus::Pass);
}

TEST_CASE("consistency suite: bowtie") {
  SimpleGraph g(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  std::vector<CheckResult> results = consistency_suite(g);
  CHECK(count_fails(results) == 0);
  CHECK(find_check(results, "qlinear-generator").status == CheckStatus::Pass);
  CHECK(find_check(results, "prop41-codim").status == CheckStatus::Pass);
}

TEST_CASE("consistency suite: two hexagons at a cut vertex") {
  SimpleGraph g(11, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                     {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {6, 11}});
  std::vector<CheckResult> results = consistency_suite(g);
  CHECK(count_fails(results) == 0);
  // codim 2 with two degree-3 generators: conclusive non-hypersurface
  CHECK(find_check(results, "codim-generators").status == CheckStatus::Pass);
  // polytope work is capped by vertex count
  CHECK(find_check(results, "delta-sanity").status == CheckStatus::Skip);
}

TEST_CASE("budget-limited checks are skipped, not passed") {
  SimpleGraph g(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  Limits tiny;
  tiny.fiber_work = 10;
  std::vector<CheckResult> results = consistency_suite(g, tiny);
  CHECK(count_fails(results) == 0);
  CHECK(find_check(results, "twolinear-generators").status ==
        CheckStatus::Skip);
  CHECK(find_check(results, "codim-generators").status == CheckStatus::Skip);
}

TEST_CASE("sweep n <= 4") {
  SweepReport report = sweep(4);
  CHECK(report.ok());
  CHECK(report.graph_counts == std::vector<int>{1, 1, 2, 6});
  CHECK(report.total_graphs() == 10);
  for (const auto& t : report.totals) CHECK(t.fail == 0);
}

TEST_CASE("sweep determinism") {
  SweepReport a = sweep(4);
  SweepReport b = sweep(4);
  CHECK(a.summary() == b.summary());
  REQUIRE(a.totals.size() == b.totals.size());
  for (size_t i = 0; i < a.totals.size(); ++i) {
    CHECK(a.totals[i].pass == b.totals[i].pass);
    CHECK(a.totals[i].skip == b.totals[i].skip);
  }
}

TEST_CASE("sweep rejects out-of-range n") {
  CHECK_THROWS_AS(sweep(9), std::invalid_argument);
  CHECK_THROWS_AS(sweep(0), std::invalid_argument);
}

TEST_CASE("certificate replay") {
  // A certificate naming a passing check must not re-fail.
  SweepReport::Certificate cert;
  cert.check = "codim-generators";
  cert.edge_list = "n 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
  CHECK_FALSE(replay_certificate(cert));
  // Real failures recorded by a sweep must replay as failures.
  SweepReport report = sweep(4);
  for (const auto& failure : report.failures)
    CHECK(replay_certificate(failure, report.limits));
}

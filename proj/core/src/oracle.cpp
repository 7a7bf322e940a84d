#include "edgering/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>

#include "edgering/classify.hpp"
#include "edgering/numeric.hpp"
#include "edgering/polytope.hpp"
#include "edgering/toric.hpp"

namespace edgering {

namespace {

// Adjacency of a graph on up to 8 vertices, one bitmask row per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, 8> adj{};

  bool has(int i, int j) const { return (adj[i] >> j) & 1; }
  void add(int i, int j) {
    adj[i] |= std::uint8_t(1) << j;
    adj[j] |= std::uint8_t(1) << i;
  }
};

bool small_connected(const SmallGraph& g) {
  std::uint8_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

// Lexicographically least adjacency bitstring over all vertex permutations,
// by branch-and-bound over insertion orders. Bits are emitted vertex by
// vertex: inserting the k-th vertex appends its adjacency to the k already
// placed ones. Branches whose emitted prefix already exceeds the incumbent
// are pruned; leaves replace the incumbent only when strictly smaller.
struct CanonSearch {
  const SmallGraph& g;
  int total_bits;
  std::vector<std::uint8_t> best, cur;
  std::array<int, 8> perm{}, best_perm{};
  std::uint8_t used = 0;

  explicit CanonSearch(const SmallGraph& graph)
      : g(graph), total_bits(graph.n * (graph.n - 1) / 2) {
    best.assign(total_bits, 2);  // anything is smaller
    cur.assign(total_bits, 0);
    rec(0, 0);
  }

  void rec(int depth, int bitpos) {
    if (depth == g.n) {
      if (cur < best) {
        best = cur;
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if ((used >> v) & 1) continue;
      for (int i = 0; i < depth; ++i)
        cur[bitpos + i] = g.has(perm[i], v) ? 1 : 0;
      // prune when the emitted prefix is already worse than the incumbent
      bool worse = false;
      for (int i = 0; i < bitpos + depth; ++i) {
        if (cur[i] != best[i]) {
          worse = cur[i] > best[i];
          break;
        }
      }
      if (worse) continue;
      perm[depth] = v;
      used |= std::uint8_t(1) << v;
      rec(depth + 1, bitpos + depth);
      used &= ~(std::uint8_t(1) << v);
    }
  }

  std::uint32_t key() const {
    std::uint32_t k = 0;
    for (int i = 0; i < total_bits; ++i) k = (k << 1) | best[i];
    return k;
  }

  SmallGraph representative() const {
    SmallGraph h;
    h.n = g.n;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (g.has(best_perm[i], best_perm[j])) h.add(i, j);
    return h;
  }
};

}  // namespace

std::vector<SimpleGraph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("graph enumeration supports 1 <= n <= 8");
  std::map<std::uint32_t, SmallGraph> level;
  {
    SmallGraph one;
    one.n = 1;
    level.emplace(0u, one);
  }
  for (int k = 1; k < n; ++k) {
    std::map<std::uint32_t, SmallGraph> next;
    for (const auto& [key, g] : level) {
      (void)key;
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        SmallGraph h = g;
        h.n = k + 1;
        for (int i = 0; i < k; ++i)
          if ((mask >> i) & 1) h.add(i, k);
        CanonSearch canon(h);
        next.emplace(canon.key(), canon.representative());
      }
    }
    level = std::move(next);
  }
  // Deterministic order: edge count, then canonical bitstring.
  std::vector<std::pair<std::pair<int, std::uint32_t>, const SmallGraph*>>
      ordered;
  for (const auto& [key, g] : level) {
    if (!small_connected(g)) continue;
    int m = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) m += g.has(i, j);
    ordered.push_back({{m, key}, &g});
  }
  std::sort(ordered.begin(), ordered.end());
  std::vector<SimpleGraph> result;
  for (const auto& [ord, g] : ordered) {
    (void)ord;
    std::vector<Edge> edges;
    for (int i = 0; i < g->n; ++i)
      for (int j = i + 1; j < g->n; ++j)
        if (g->has(i, j)) edges.emplace_back(i + 1, j + 1);
    result.emplace_back(g->n, std::move(edges));
  }
  return result;
}

namespace {

const char* kCheckNames[] = {
    "codim-formula",      "block-partition",      "cycle-count-bounds",
    "bipartite-even-cycles", "verdict-exclusive", "thm13-hypersurface",
    "prop41-codim",       "prop33-codim",         "oracle-codim",
    "oracle-soundness",   "codim-generators",     "qlinear-generator",
    "qlinear-converse",   "twolinear-generators", "twolinear-converse",
    "eg-bound",           "lemma310-even-cycles", "prop39-walk-match",
    "dim-agreement",      "delta-sanity",         "ehrhart-L1",
    "ehrhart-polynomiality", "lemma24-delta-degree", "codegree-agreement",
};

class SuiteBuilder {
 public:
  void pass(const std::string& name) { results_.push_back({name, CheckStatus::Pass, ""}); }
  void fail(const std::string& name, const std::string& detail) {
    results_.push_back({name, CheckStatus::Fail, detail});
  }
  void skip(const std::string& name, const std::string& reason) {
    results_.push_back({name, CheckStatus::Skip, reason});
  }
  void check(const std::string& name, bool ok, const std::string& detail) {
    if (ok)
      pass(name);
    else
      fail(name, detail);
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

bool binomial_sound(const SimpleGraph& g, const Binomial& b) {
  if (b.trivial || b.degree < 2) return false;
  std::vector<int> vp(g.vertex_count(), 0), vm(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (b.plus[e] > 0 && b.minus[e] > 0) return false;  // shared support
    const auto& [u, v] = g.edge(e);
    vp[u - 1] += b.plus[e];
    vp[v - 1] += b.plus[e];
    vm[u - 1] += b.minus[e];
    vm[v - 1] += b.minus[e];
  }
  return vp == vm;
}

}  // namespace

std::vector<CheckResult> consistency_suite(const SimpleGraph& g,
                                           const Limits& limits) {
  if (!g.connected())
    throw std::invalid_argument("consistency suite requires a connected graph");
  SuiteBuilder out;
  int n = g.vertex_count(), m = g.edge_count();

  BipartiteProfile bip = bipartite_components(g);
  int r = bip.bipartite_component_count;
  int codim = m - n + r;
  int cg = cyclotomic_number(g);
  out.check("codim-formula", codim == (r == 1 ? cg : cg - 1),
            "codim " + std::to_string(codim) + " vs c(G) " + std::to_string(cg));

  BlockDecomposition blocks = block_decomposition(g);
  long long block_edges = 0;
  for (const auto& b : blocks.blocks) block_edges += b.size();
  out.check("block-partition", block_edges == m, "block edge sum mismatch");

  std::vector<Cycle> cycles = enumerate_cycles(g, std::max(3, n));
  long long cycle_count = static_cast<long long>(cycles.size());
  if (cg == 0) {
    out.check("cycle-count-bounds", cycles.empty(), "tree with cycles");
  } else {
    out.check("cycle-count-bounds",
              cycle_count >= cg && cycle_count <= (1LL << cg) - 1,
              std::to_string(cycle_count) + " cycles, c(G)=" +
                  std::to_string(cg));
  }
  bool all_even = std::all_of(cycles.begin(), cycles.end(),
                              [](const Cycle& c) { return !c.odd(); });
  out.check("bipartite-even-cycles", (r == 1) == all_even,
            "bipartiteness vs cycle parities");

  Classification cls = classify(g);
  auto simplex = simplex_case(g);
  auto two = classify_two_linear(g);
  auto ql = classify_q_linear(g);
  int fired = simplex.has_value() + two.has_value() + ql.has_value();
  bool exclusive =
      fired <= 1 &&
      simplex.has_value() == (cls.verdict == Verdict::PolynomialRing) &&
      two.has_value() == (cls.verdict == Verdict::TwoLinear) &&
      ql.has_value() == (cls.verdict == Verdict::QLinear);
  out.check("verdict-exclusive", exclusive, "overlapping classification cases");

  auto hs = hypersurface_case(g);
  out.check("thm13-hypersurface",
            cls.verdict != Verdict::QLinear || hs.has_value(),
            "q-linear verdict without hypersurface shape");
  out.check("prop41-codim", hs.has_value() == (codim == 1),
            "hypersurface shape vs codimension");
  out.check("prop33-codim", simplex.has_value() == (codim == 0),
            "polynomial-ring shape vs codimension");

  int maxdeg = limits.fiber_max_degree > 0 ? limits.fiber_max_degree : n + 1;
  GeneratorProfile prof = minimal_generators(g, maxdeg, {limits.fiber_work});
  long long gens = static_cast<long long>(prof.generators.size());
  out.check("oracle-codim", prof.codimension == codim, "codimension mismatch");

  bool sound = std::all_of(
      prof.generators.begin(), prof.generators.end(),
      [&](const Binomial& b) { return binomial_sound(g, b); });
  out.check("oracle-soundness", sound, "unsound generator binomial");

  if (codim <= 1) {
    if (prof.complete)
      out.check("codim-generators", gens == codim,
                "codim " + std::to_string(codim) + " but " +
                    std::to_string(gens) + " generators");
    else
      out.skip("codim-generators", "oracle truncated");
  } else {
    if (gens >= 2)
      out.pass("codim-generators");
    else if (prof.complete)
      out.fail("codim-generators", "codim >= 2 but fewer than 2 generators");
    else
      out.skip("codim-generators", "oracle truncated, inconclusive");
  }

  if (cls.verdict == Verdict::QLinear) {
    if (!prof.complete)
      out.skip("qlinear-generator", "oracle truncated");
    else
      out.check("qlinear-generator",
                gens == 1 && prof.generators[0].degree == cls.q,
                "expected one generator of degree " + std::to_string(cls.q));
  } else {
    out.pass("qlinear-generator");
  }

  if (codim == 1 && prof.complete && gens == 1 &&
      prof.generators[0].degree >= 3) {
    out.check("qlinear-converse",
              cls.verdict == Verdict::QLinear &&
                  cls.q == prof.generators[0].degree,
              "single degree-" + std::to_string(prof.generators[0].degree) +
                  " generator not classified q-linear");
  } else {
    out.pass("qlinear-converse");
  }

  auto all_degree_2 = [&]() {
    return std::all_of(prof.generators.begin(), prof.generators.end(),
                       [](const Binomial& b) { return b.degree == 2; });
  };
  if (cls.verdict == Verdict::TwoLinear) {
    if (!prof.complete)
      out.skip("twolinear-generators", "oracle truncated");
    else
      out.check("twolinear-generators",
                all_degree_2() && Int(static_cast<long>(gens)) == binomial(codim + 1, 2),
                "expected C(c+1,2) quadratic generators");
  } else {
    out.pass("twolinear-generators");
  }

  if (codim >= 1 && prof.complete && gens > 0 && all_degree_2() &&
      Int(static_cast<long>(gens)) == binomial(codim + 1, 2) && two.has_value()) {
    out.check("twolinear-converse", cls.verdict == Verdict::TwoLinear,
              "2-linear structure not classified 2-linear");
  } else {
    out.pass("twolinear-converse");
  }

  if (cls.verdict == Verdict::TwoLinear || cls.verdict == Verdict::QLinear) {
    if (!prof.complete) {
      out.skip("eg-bound", "oracle truncated");
    } else if (prof.degree_histogram.size() == 1 &&
               prof.degree_histogram.count(cls.q) == 1) {
      out.check("eg-bound", Int(static_cast<long>(gens)) >= eg_lower_bound(codim, cls.q),
                "generator count below the q-linear lower bound");
    } else {
      out.fail("eg-bound", "linear verdict but not single-degree generated");
    }
  } else {
    out.pass("eg-bound");
  }

  if (cls.verdict == Verdict::QLinear) {
    bool ok = true;
    for (const Cycle& c : cycles)
      if (!c.odd() && c.length() != 2 * cls.q) ok = false;
    out.check("lemma310-even-cycles", ok,
              "even cycle of length != 2q in a q-linear graph");
  } else {
    out.pass("lemma310-even-cycles");
  }

  if (prof.generators.empty()) {
    out.pass("prop39-walk-match");
  } else {
    int top = 2;
    for (const Binomial& b : prof.generators) top = std::max(top, b.degree);
    std::vector<Walk> candidates = primitive_walk_candidates(g, top);
    std::vector<Binomial> walk_binomials;
    for (const Walk& w : candidates) {
      Binomial b = walk_binomial(g, w);
      if (!b.trivial) walk_binomials.push_back(std::move(b));
    }
    bool matched = true;
    for (const Binomial& b : prof.generators) {
      if (std::find(walk_binomials.begin(), walk_binomials.end(), b) ==
          walk_binomials.end()) {
        matched = false;
        break;
      }
    }
    out.check("prop39-walk-match", matched,
              "generator without a primitive even closed walk");
  }

  if (n > limits.polytope_max_vertices || m == 0) {
    std::string reason =
        m == 0 ? "empty polytope"
               : "polytope checks capped at n <= " +
                     std::to_string(limits.polytope_max_vertices);
    for (const char* name :
         {"dim-agreement", "delta-sanity", "ehrhart-L1",
          "ehrhart-polynomiality", "lemma24-delta-degree",
          "codegree-agreement"})
      out.skip(name, reason);
  } else {
    WorkBudget budget{limits.lattice_candidates};
    try {
      EdgePolytope p = edge_polytope(g);  // aborts on rank/formula mismatch
      out.pass("dim-agreement");
      EhrhartTable table = ehrhart_table(p, p.dim + 1, budget);
      DeltaPolynomial delta = delta_from_table(p, table);
      bool sanity = delta.coefficients[0] == 1;
      if (p.dim >= 1) sanity = sanity && delta.coefficients[1] == m - p.dim - 1;
      out.check("delta-sanity", sanity, "delta_0/delta_1 mismatch");
      out.check("ehrhart-L1", table.counts[1] == m, "L(1) != m");
      out.check("ehrhart-polynomiality", ehrhart_difference_vanishes(p, table),
                "(d+1)-st finite difference of L nonzero");
      if (cls.verdict == Verdict::QLinear)
        out.check("lemma24-delta-degree", delta.degree <= cls.q - 1,
                  "delta degree exceeds q - 1");
      else
        out.pass("lemma24-delta-degree");
      if (n > limits.codegree_max_vertices)
        out.skip("codegree-agreement",
                 "interior search capped at n <= " +
                     std::to_string(limits.codegree_max_vertices));
      else
        out.check("codegree-agreement",
                  codegree_by_search(p, budget) == delta.codegree,
                  "interior search vs d + 1 - deg");
    } catch (const BudgetExceeded& e) {
      for (const char* name :
           {"delta-sanity", "ehrhart-L1", "ehrhart-polynomiality",
            "lemma24-delta-degree", "codegree-agreement"})
        out.skip(name, e.what());
    }
  }

  std::vector<CheckResult> results = out.take();
  if (results.size() != std::size(kCheckNames))
    throw std::logic_error("consistency suite emitted a wrong check count");
  for (size_t i = 0; i < results.size(); ++i)
    if (results[i].name != kCheckNames[i])
      throw std::logic_error("consistency suite check order drifted");
  return results;
}

int SweepReport::total_graphs() const {
  int total = 0;
  for (int c : graph_counts) total += c;
  return total;
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  os << "sweep n <= " << n_max << ": " << total_graphs() << " graphs (";
  for (size_t i = 0; i < graph_counts.size(); ++i)
    os << (i ? ", " : "") << "n=" << i + 1 << ": " << graph_counts[i];
  os << ")\n";
  for (const auto& t : totals) {
    os << "  " << t.name << ": pass=" << t.pass << " fail=" << t.fail;
    if (t.skip) os << " skip=" << t.skip;
    os << "\n";
  }
  os << (failures.empty() ? "all checks passed\n"
                          : std::to_string(failures.size()) + " failures\n");
  return os.str();
}

SweepReport sweep(int n_max, const Limits& limits) {
  if (n_max < 1 || n_max > 8)
    throw std::invalid_argument("sweep supports 1 <= nMax <= 8");
  SweepReport report;
  report.n_max = n_max;
  report.limits = limits;
  for (const char* name : kCheckNames)
    report.totals.push_back({name, 0, 0, 0});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<SimpleGraph> graphs = enumerate_connected_graphs(n);
    report.graph_counts.push_back(static_cast<int>(graphs.size()));
    for (const SimpleGraph& g : graphs) {
      std::vector<CheckResult> results = consistency_suite(g, limits);
      for (size_t i = 0; i < results.size(); ++i) {
        switch (results[i].status) {
          case CheckStatus::Pass:
            ++report.totals[i].pass;
            break;
          case CheckStatus::Fail:
            ++report.totals[i].fail;
            report.failures.push_back(
                {results[i].name, to_edge_list_text(g), results[i].detail});
            break;
          case CheckStatus::Skip:
            ++report.totals[i].skip;
            break;
        }
      }
    }
  }
  return report;
}

bool replay_certificate(const SweepReport::Certificate& cert,
                        const Limits& limits) {
  SimpleGraph g = parse_edge_list(cert.edge_list);
  for (const CheckResult& result : consistency_suite(g, limits))
    if (result.name == cert.check) return result.status == CheckStatus::Fail;
  return false;
}

}  // namespace edgering

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgering/classify.hpp"
#include "edgering/graph.hpp"
#include "edgering/oracle.hpp"
#include "edgering/polytope.hpp"
#include "edgering/toric.hpp"

namespace {

using edgering::BudgetExceeded;
using edgering::Classification;
using edgering::SimpleGraph;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw edgering::ParseError(0, "cannot open " + path);
  return edgering::parse_edge_list(in);
}

std::string join_delta(const edgering::DeltaPolynomial& delta) {
  std::string s = "(";
  for (int i = 0; i <= delta.degree; ++i) {
    if (i) s += ", ";
    s += delta.coefficients[i].get_str();
  }
  return s + ")";
}

struct AnalyzeOptions {
  std::string path;
  bool as_json = false;
  std::string json_out;
  int max_dilation = -1;  // -1: up to dim
  int max_degree = -1;    // -1: n + 1
  long long budget = -1;  // -1: defaults
  bool quiet = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  auto started = std::chrono::steady_clock::now();
  SimpleGraph g = load_graph(opt.path);
  if (!g.connected()) {
    std::cerr << "error: graph must be connected\n";
    return kExitUsage;
  }
  bool budget_hit = false;

  json report;
  report["input"] = {{"path", opt.path},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"edges", json::array()}};
  for (const auto& [u, v] : g.edges())
    report["input"]["edges"].push_back({u, v});

  edgering::BipartiteProfile bip = edgering::bipartite_components(g);
  edgering::BlockDecomposition blocks = edgering::block_decomposition(g);
  report["graph"] = {
      {"n", g.vertex_count()},
      {"m", g.edge_count()},
      {"components", bip.component_count},
      {"r", bip.bipartite_component_count},
      {"cyclotomic", edgering::cyclotomic_number(g)},
      {"blocks", static_cast<int>(blocks.blocks.size())},
      {"nonEdgeBlocks", blocks.s()},
      {"cutVertices", blocks.cut_vertices},
  };

  edgering::WorkBudget lattice_budget;
  edgering::FiberBudget fiber_budget;
  if (opt.budget > 0) {
    lattice_budget.max_candidates = opt.budget;
    fiber_budget.max_work = opt.budget;
  }

  report["polytope"] = json();
  std::optional<edgering::DeltaPolynomial> delta;
  std::optional<edgering::EhrhartTable> table;
  if (g.edge_count() == 0) {
    report["polytope"] = {{"dim", -1}, {"note", "empty polytope"}};
  } else {
    edgering::EdgePolytope p = edgering::edge_polytope(g);
    report["polytope"]["dim"] = p.dim;
    int dilation = opt.max_dilation >= 0 ? opt.max_dilation : p.dim;
    try {
      table = edgering::ehrhart_table(p, dilation, lattice_budget);
      json counts = json::array();
      for (const edgering::Int& c : table->counts)
        counts.push_back(c.get_str());
      report["polytope"]["ehrhart"] = counts;
      if (dilation >= p.dim) {
        delta = edgering::delta_from_table(p, *table);
        json coeffs = json::array();
        for (const edgering::Int& c : delta->coefficients)
          coeffs.push_back(c.get_str());
        report["polytope"]["delta"] = coeffs;
        report["polytope"]["degree"] = delta->degree;
        report["polytope"]["codegree"] = delta->codegree;
      } else {
        report["polytope"]["note"] =
            "delta omitted: --max-dilation below dim";
      }
    } catch (const BudgetExceeded& e) {
      budget_hit = true;
      report["polytope"]["error"] = e.what();
    }
  }

  report["toric"] = json();
  std::optional<edgering::GeneratorProfile> profile;
  {
    int maxdeg =
        opt.max_degree > 0 ? opt.max_degree : g.vertex_count() + 1;
    try {
      profile = edgering::minimal_generators(g, maxdeg, fiber_budget);
      report["toric"]["codimension"] = profile->codimension;
      report["toric"]["maxDegree"] = maxdeg;
      report["toric"]["maxDegreeProcessed"] = profile->max_degree_processed;
      report["toric"]["complete"] = profile->complete;
      json hist = json::object();
      for (const auto& [deg, count] : profile->degree_histogram)
        hist[std::to_string(deg)] = count;
      report["toric"]["degreeHistogram"] = hist;
      json gens = json::array();
      for (const edgering::Binomial& b : profile->generators)
        gens.push_back(edgering::to_string(b));
      report["toric"]["generators"] = gens;
    } catch (const std::invalid_argument& e) {
      report["toric"]["error"] = e.what();
    }
  }

  Classification cls = edgering::classify(g);
  report["classification"] = {{"verdict", ""}, {"case", cls.case_tag}};
  switch (cls.verdict) {
    case edgering::Verdict::PolynomialRing:
      report["classification"]["verdict"] = "polynomial-ring";
      break;
    case edgering::Verdict::TwoLinear:
      report["classification"]["verdict"] = "2-linear";
      report["classification"]["delta"] = cls.delta;
      report["classification"]["q"] = 2;
      break;
    case edgering::Verdict::QLinear:
      report["classification"]["verdict"] = "q-linear";
      report["classification"]["q"] = cls.q;
      break;
    case edgering::Verdict::NoLinearResolution:
      report["classification"]["verdict"] = "no-linear-resolution";
      break;
  }
  report["classification"]["summary"] = edgering::to_string(cls);

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  report["timing"] = {{"totalMs", elapsed}};

  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out);
    out << report.dump(2) << "\n";
  }
  if (opt.as_json) {
    std::cout << report.dump(2) << "\n";
  } else if (!opt.quiet) {
    std::cout << "input: " << opt.path << " (n=" << g.vertex_count()
              << ", m=" << g.edge_count() << ")\n";
    std::cout << "graph: components=" << bip.component_count
              << " r=" << bip.bipartite_component_count
              << " c(G)=" << edgering::cyclotomic_number(g)
              << " non-edge blocks=" << blocks.s() << "\n";
    if (report["polytope"].contains("error")) {
      std::cout << "polytope: budget exceeded\n";
    } else if (delta) {
      std::cout << "polytope: dim=" << report["polytope"]["dim"]
                << " delta=" << join_delta(*delta)
                << " degree=" << delta->degree
                << " codegree=" << delta->codegree << "\n";
    }
    if (profile) {
      std::cout << "toric: codim=" << profile->codimension
                << " complete=" << (profile->complete ? "yes" : "no")
                << " generators=" << profile->generators.size() << "\n";
      for (const edgering::Binomial& b : profile->generators)
        std::cout << "  degree " << b.degree << ": " << edgering::to_string(b)
                  << "\n";
    }
    std::cout << "classification: " << edgering::to_string(cls) << "\n";
    std::cout << "time: " << elapsed << "ms\n";
  }
  return budget_hit ? kExitBudget : kExitOk;
}

int run_classify(const std::string& path) {
  SimpleGraph g = load_graph(path);
  if (!g.connected()) {
    std::cerr << "error: graph must be connected\n";
    return kExitUsage;
  }
  std::cout << edgering::to_string(edgering::classify(g)) << "\n";
  return kExitOk;
}

json sweep_to_json(const edgering::SweepReport& report) {
  json j;
  j["nMax"] = report.n_max;
  j["limits"] = {
      {"fiberMaxDegree", report.limits.fiber_max_degree},
      {"fiberWork", report.limits.fiber_work},
      {"latticeCandidates", report.limits.lattice_candidates},
      {"polytopeMaxVertices", report.limits.polytope_max_vertices},
      {"codegreeMaxVertices", report.limits.codegree_max_vertices},
  };
  j["graphCounts"] = report.graph_counts;
  j["checks"] = json::array();
  for (const auto& t : report.totals)
    j["checks"].push_back({{"name", t.name},
                           {"pass", t.pass},
                           {"fail", t.fail},
                           {"skip", t.skip}});
  j["failures"] = json::array();
  for (const auto& f : report.failures)
    j["failures"].push_back(
        {{"check", f.check}, {"edgeList", f.edge_list}, {"detail", f.detail}});
  return j;
}

int run_sweep(int n_max, const std::string& json_out, bool as_json,
              long long budget, int max_degree, bool quiet) {
  edgering::Limits limits;
  if (budget > 0) {
    limits.fiber_work = budget;
    limits.lattice_candidates = budget;
  }
  if (max_degree > 0) limits.fiber_max_degree = max_degree;
  edgering::SweepReport report = edgering::sweep(n_max, limits);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << sweep_to_json(report).dump(2) << "\n";
  }
  if (as_json)
    std::cout << sweep_to_json(report).dump(2) << "\n";
  else if (!quiet)
    std::cout << report.summary();
  return report.ok() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge ring resolution classifier"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full structural, polytope and toric report");
  analyze->add_option("path", analyze_opt.path, "edge list file")->required();
  analyze->add_flag("--json", analyze_opt.as_json, "print JSON");
  analyze->add_option("--json-out", analyze_opt.json_out, "write JSON file");
  analyze->add_option("--max-dilation", analyze_opt.max_dilation,
                      "Ehrhart dilation cap");
  analyze->add_option("--max-degree", analyze_opt.max_degree,
                      "generator degree cap");
  analyze->add_option("--budget", analyze_opt.budget, "work budget");
  analyze->add_flag("--quiet", analyze_opt.quiet, "suppress human output");

  std::string classify_path;
  CLI::App* classify =
      app.add_subcommand("classify", "one-line resolution verdict");
  classify->add_option("path", classify_path, "edge list file")->required();

  int sweep_n = 0;
  std::string sweep_json_out;
  bool sweep_json = false, sweep_quiet = false;
  long long sweep_budget = -1;
  int sweep_max_degree = -1;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "verify all graphs on <= nMax vertices");
  sweep_cmd->add_option("nMax", sweep_n, "max vertex count")->required();
  sweep_cmd->add_flag("--json", sweep_json, "print JSON");
  sweep_cmd->add_option("--json-out", sweep_json_out, "write JSON file");
  sweep_cmd->add_option("--budget", sweep_budget, "per-graph work budget");
  sweep_cmd->add_option("--max-degree", sweep_max_degree,
                        "generator degree cap");
  sweep_cmd->add_flag("--quiet", sweep_quiet, "suppress human output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (classify->parsed()) return run_classify(classify_path);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_n, sweep_json_out, sweep_json, sweep_budget,
                       sweep_max_degree, sweep_quiet);
  } catch (const edgering::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

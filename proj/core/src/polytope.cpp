#include "edgering/polytope.hpp"

#include <algorithm>
#include <functional>

#include "edgering/maxflow.hpp"
#include "edgering/simplex.hpp"

namespace edgering {

long long MaxFlow::run(int source, int sink) {
  for (size_t i = 0; i + 1 < cap_.size(); i += 2) {
    cap_[i] += cap_[i + 1];  // restore forward capacity from prior runs
    cap_[i + 1] = 0;
  }
  long long flow = 0;
  while (bfs(source, sink)) {
    it_ = head_;
    while (long long pushed = dfs(source, sink, LLONG_MAX)) flow += pushed;
  }
  return flow;
}

bool MaxFlow::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  bfs_queue_.clear();
  bfs_queue_.push_back(source);
  for (size_t qi = 0; qi < bfs_queue_.size(); ++qi) {
    int v = bfs_queue_[qi];
    for (int e = head_[v]; e != -1; e = next_[e])
      if (cap_[e] > 0 && level_[to_[e]] < 0) {
        level_[to_[e]] = level_[v] + 1;
        bfs_queue_.push_back(to_[e]);
      }
  }
  return level_[sink] >= 0;
}

long long MaxFlow::dfs(int v, int sink, long long pushed) {
  if (v == sink) return pushed;
  for (int& e = it_[v]; e != -1; e = next_[e]) {
    int w = to_[e];
    if (cap_[e] > 0 && level_[w] == level_[v] + 1) {
      long long got = dfs(w, sink, std::min(pushed, cap_[e]));
      if (got > 0) {
        cap_[e] -= got;
        cap_[e ^ 1] += got;
        return got;
      }
    }
  }
  return 0;
}

namespace {

// Affine rank of the 0/1 vertex vectors, by fraction-free Gaussian
// elimination over the integers on the homogenized matrix [rho(e) | 1].
int affine_rank(const std::vector<std::vector<int>>& vectors, int n) {
  std::vector<std::vector<Int>> m;
  for (const auto& v : vectors) {
    std::vector<Int> row(n + 1);
    for (int i = 0; i < n; ++i) row[i] = v[i];
    row[n] = 1;
    m.push_back(std::move(row));
  }
  int rank = 0;
  size_t rows = m.size();
  for (int col = 0; col <= n && rank < static_cast<int>(rows); ++col) {
    size_t piv = rows;
    for (size_t i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Int a = m[i][col], b = m[rank][col];
      for (int j = col; j <= n; ++j) m[i][j] = m[i][j] * b - m[rank][j] * a;
    }
    ++rank;
  }
  return rank - 1;  // affine rank = linear rank of homogenization - 1
}

// Integral cone membership via the bipartite double cover.
//
// x lies in cone{rho(e)} iff there is lambda >= 0 on the edges with vertex
// sums x. Splitting every vertex i into i' and i'' and every edge {u,v} into
// u'-v'' and v'-u'' turns this into a transportation problem with supplies
// and demands x on the two sides: any lambda transfers with weight lambda on
// both copies, and any feasible transport lambda~ averages back via
// lambda_{uv} = (lambda~_{u'v''} + lambda~_{v'u''}) / 2. Feasibility of a
// transportation problem with integer margins is decided exactly by integer
// max flow, and the cone is invariant under scaling, so rational membership
// in tP reduces to this after clearing denominators.
class ConeMembership {
 public:
  explicit ConeMembership(const EdgePolytope& p)
      : n_(p.ambient_dim), flow_(2 * p.ambient_dim + 2) {
    source_ = 2 * n_;
    sink_ = 2 * n_ + 1;
    supply_arc_.resize(n_);
    demand_arc_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      supply_arc_[i] = flow_.add_edge(source_, i, 0);
      demand_arc_[i] = flow_.add_edge(n_ + i, sink_, 0);
    }
    for (const auto& [u, v] : p.edge_pairs) {
      cross_arcs_.push_back(flow_.add_edge(u - 1, n_ + v - 1, 0));
      cross_arcs_.push_back(flow_.add_edge(v - 1, n_ + u - 1, 0));
    }
  }

  bool contains(const std::vector<long long>& x) {
    long long total = 0;
    for (int i = 0; i < n_; ++i) {
      if (x[i] < 0) return false;
      total += x[i];
    }
    if (total == 0) return true;
    for (int i = 0; i < n_; ++i) {
      flow_.set_capacity(supply_arc_[i], x[i]);
      flow_.set_capacity(demand_arc_[i], x[i]);
    }
    for (int a : cross_arcs_) flow_.set_capacity(a, total);
    return flow_.run(source_, sink_) == total;
  }

 private:
  int n_, source_, sink_;
  MaxFlow flow_;
  std::vector<int> supply_arc_, demand_arc_, cross_arcs_;
};

bool lp_membership(const EdgePolytope& p, const RationalPoint& x,
                   const Rat& t) {
  int n = p.ambient_dim;
  int m = static_cast<int>(p.vertex_vectors.size());
  std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(m, Rat(0)));
  std::vector<Rat> b(n + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) A[i][j] = p.vertex_vectors[j][i];
    A[n][j] = 1;
  }
  for (int i = 0; i < n; ++i) b[i] = x[i];
  b[n] = t;
  return lp_feasible(A, b);
}

}  // namespace

EdgePolytope edge_polytope(const SimpleGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("edge polytope requires a connected graph");
  EdgePolytope p;
  p.ambient_dim = g.vertex_count();
  p.edge_pairs = g.edges();
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> vec(p.ambient_dim, 0);
    vec[u - 1] = 1;
    vec[v - 1] = 1;
    p.vertex_vectors.push_back(std::move(vec));
  }
  BipartiteProfile profile = bipartite_components(g);
  p.dim = g.vertex_count() - profile.bipartite_component_count - 1;
  if (profile.bipartite_component_count == 1) {
    p.bipartition.assign(p.ambient_dim, 0);
    for (int v = 1; v <= p.ambient_dim; ++v)
      p.bipartition[v - 1] = profile.color[v];
  }
  int rank = affine_rank(p.vertex_vectors, p.ambient_dim);
  if (rank != p.dim)
    throw std::logic_error("edge polytope dimension mismatch: formula " +
                           std::to_string(p.dim) + " vs affine rank " +
                           std::to_string(rank));
  return p;
}

bool contains_lp(const EdgePolytope& p, const RationalPoint& x,
                 const Rat& t) {
  if (static_cast<int>(x.size()) != p.ambient_dim)
    throw std::invalid_argument("point has wrong length");
  if (t <= 0) throw std::invalid_argument("dilation must be positive");
  return lp_membership(p, x, t);
}

bool contains(const EdgePolytope& p, const RationalPoint& x, const Rat& t) {
  if (static_cast<int>(x.size()) != p.ambient_dim)
    throw std::invalid_argument("point has wrong length");
  if (t <= 0) throw std::invalid_argument("dilation must be positive");
  Rat total(0);
  for (const auto& xi : x) {
    if (xi < 0) return false;
    total += xi;
  }
  if (total != 2 * t) return false;  // every rho(e) has coordinate sum 2
  bool integral = t.get_den() == 1;
  for (const auto& xi : x)
    integral = integral && xi.get_den() == 1 && xi.get_num().fits_slong_p();
  if (integral) {
    ConeMembership member(p);
    std::vector<long long> xi(p.ambient_dim);
    for (int i = 0; i < p.ambient_dim; ++i) xi[i] = x[i].get_num().get_si();
    return member.contains(xi);
  }
  return lp_membership(p, x, t);
}

bool relint_contains(const EdgePolytope& p, const RationalPoint& x,
                     const Rat& t) {
  if (static_cast<int>(x.size()) != p.ambient_dim)
    throw std::invalid_argument("point has wrong length");
  if (t <= 0) throw std::invalid_argument("dilation must be positive");
  int n = p.ambient_dim;
  int m = static_cast<int>(p.vertex_vectors.size());
  // Variables (mu_1..mu_m, eps) with lambda_e = mu_e + eps; maximize eps.
  std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(m + 1, Rat(0)));
  std::vector<Rat> b(n + 1), c(m + 1, Rat(0));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) A[i][j] = p.vertex_vectors[j][i];
    A[n][j] = 1;
  }
  for (int i = 0; i < n; ++i) {
    Rat degree(0);
    for (int j = 0; j < m; ++j) degree += p.vertex_vectors[j][i];
    A[i][m] = degree;
    b[i] = x[i];
  }
  A[n][m] = m;
  b[n] = t;
  c[m] = 1;
  LpResult res = lp_maximize(A, b, c);
  if (res.status == LpResult::Status::Unbounded)
    throw std::logic_error("relint LP cannot be unbounded");
  return res.status == LpResult::Status::Optimal && res.objective > 0;
}

namespace {

// Enumerates x >= 0 with sum(x) = total and x_i <= cap, pruning by the
// bipartition class sums (each class must total t exactly) when available.
// Returns false when the candidate budget runs out.
class CompositionEnumerator {
 public:
  CompositionEnumerator(const EdgePolytope& p, int t, long long budget)
      : p_(p), t_(t), budget_(budget), x_(p.ambient_dim), xi_(p.ambient_dim) {}

  template <typename Fn>
  bool enumerate(Fn&& fn) {
    fn_ = std::forward<Fn>(fn);
    return descend(0, 2 * t_, t_, t_);
  }

 private:
  // side budgets: remaining class sums when bipartition is known
  bool descend(int idx, int remaining, long long left0, long long left1) {
    if (--budget_ < 0) return false;
    int n = p_.ambient_dim;
    if (idx == n) {
      if (remaining == 0) fn_(xi_);
      return true;
    }
    int tail = n - idx - 1;
    int lo = std::max(0, remaining - t_ * tail);
    int hi = std::min(t_, remaining);
    bool bip = !p_.bipartition.empty();
    for (int v = hi; v >= lo; --v) {
      long long l0 = left0, l1 = left1;
      if (bip) {
        if (p_.bipartition[idx] == 0) {
          l0 -= v;
        } else {
          l1 -= v;
        }
        if (l0 < 0 || l1 < 0) continue;
      }
      xi_[idx] = v;
      if (!descend(idx + 1, remaining - v, l0, l1)) return false;
    }
    xi_[idx] = 0;
    return true;
  }

  const EdgePolytope& p_;
  int t_;
  long long budget_;
  std::vector<int> x_;
  std::vector<long long> xi_;
  std::function<void(const std::vector<long long>&)> fn_;
};

}  // namespace

Int lattice_point_count(const EdgePolytope& p, int t,
                        const WorkBudget& budget) {
  if (t < 1) throw std::invalid_argument("dilation must be >= 1");
  ConeMembership member(p);
  Int count = 0;
  CompositionEnumerator cands(p, t, budget.max_candidates);
  bool finished = cands.enumerate([&](const std::vector<long long>& x) {
    if (member.contains(x)) ++count;
  });
  if (!finished)
    throw BudgetExceeded("lattice enumeration budget exceeded at dilation " +
                         std::to_string(t));
  return count;
}

EhrhartTable ehrhart_table(const EdgePolytope& p, int max_dilation,
                           const WorkBudget& budget) {
  EhrhartTable table;
  table.counts.push_back(1);
  for (int t = 1; t <= max_dilation; ++t)
    table.counts.push_back(lattice_point_count(p, t, budget));
  return table;
}

DeltaPolynomial delta_from_table(const EdgePolytope& p,
                                 const EhrhartTable& table) {
  int d = p.dim;
  if (d < 0)
    throw std::invalid_argument("empty polytope has no delta polynomial");
  if (table.max_dilation() < d)
    throw std::invalid_argument("Ehrhart table too short for delta");
  DeltaPolynomial delta;
  for (int i = 0; i <= d; ++i) {
    Int v = 0;
    for (int j = 0; j <= i; ++j) {
      Int term = binomial(d + 1, j) * table.counts[i - j];
      if (j % 2 == 0)
        v += term;
      else
        v -= term;
    }
    delta.coefficients.push_back(v);
  }
  if (delta.coefficients[0] != 1)
    throw std::logic_error("delta_0 != 1");
  for (const Int& v : delta.coefficients)
    if (v < 0) throw std::logic_error("negative delta coefficient");
  delta.degree = 0;
  for (int i = d; i >= 0; --i)
    if (delta.coefficients[i] != 0) {
      delta.degree = i;
      break;
    }
  delta.codegree = d + 1 - delta.degree;
  return delta;
}

DeltaPolynomial delta_polynomial(const EdgePolytope& p,
                                 const WorkBudget& budget) {
  return delta_from_table(p, ehrhart_table(p, p.dim, budget));
}

bool ehrhart_difference_vanishes(const EdgePolytope& p,
                                 const EhrhartTable& table) {
  int d = p.dim;
  if (table.max_dilation() < d + 1)
    throw std::invalid_argument("Ehrhart table must reach dilation d+1");
  Int s = 0;
  for (int j = 0; j <= d + 1; ++j) {
    Int term = binomial(d + 1, j) * table.counts[d + 1 - j];
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s == 0;
}

int codegree_by_search(const EdgePolytope& p, const WorkBudget& budget) {
  int d = p.dim;
  int n = p.ambient_dim;
  for (int r = 1; r <= d + 1; ++r) {
    bool found = false;
    CompositionEnumerator cands(p, r, budget.max_candidates);
    RationalPoint x(n);
    bool finished = cands.enumerate([&](const std::vector<long long>& xi) {
      if (found) return;
      // Interior points have every coordinate positive (the graph is
      // connected, so every vertex meets an edge); skip the rest early.
      for (int i = 0; i < n; ++i)
        if (xi[i] == 0) return;
      for (int i = 0; i < n; ++i) x[i] = Rat(static_cast<long>(xi[i]));
      if (relint_contains(p, x, Rat(r))) found = true;
    });
    if (!finished)
      throw BudgetExceeded("codegree search budget exceeded");
    if (found) return r;
  }
  throw std::logic_error("codegree search exhausted r <= d+1");
}

std::pair<RationalPoint, int> even_cycle_interior_witness(const Cycle& c,
                                                          int ambient_n) {
  if (c.length() % 2 != 0)
    throw std::invalid_argument("interior witness requires an even cycle");
  int n = ambient_n;
  for (int v : c.vertices) n = std::max(n, v);
  RationalPoint x(n, Rat(0));
  for (int v : c.vertices) x[v - 1] = 1;
  return {std::move(x), c.length() / 2};
}

}  // namespace edgering

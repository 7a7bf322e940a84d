#include "edgering/toric.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace edgering {

namespace {

// Lex order on monomials: earlier edge index is more significant, larger
// exponent wins. Used for the plus/minus normalization and connector choice.
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Binomial make_binomial(const SimpleGraph& g, std::vector<int> plus,
                       std::vector<int> minus) {
  int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    int common = std::min(plus[e], minus[e]);
    plus[e] -= common;
    minus[e] -= common;
  }
  Binomial b;
  b.trivial = std::all_of(plus.begin(), plus.end(),
                          [](int v) { return v == 0; }) &&
              std::all_of(minus.begin(), minus.end(),
                          [](int v) { return v == 0; });
  if (!lex_greater(plus, minus) && !b.trivial) std::swap(plus, minus);
  int deg_plus = 0, deg_minus = 0;
  std::vector<int> vertex_plus(g.vertex_count(), 0),
      vertex_minus(g.vertex_count(), 0);
  for (int e = 0; e < m; ++e) {
    deg_plus += plus[e];
    deg_minus += minus[e];
    const auto& [u, v] = g.edge(e);
    vertex_plus[u - 1] += plus[e];
    vertex_plus[v - 1] += plus[e];
    vertex_minus[u - 1] += minus[e];
    vertex_minus[v - 1] += minus[e];
  }
  if (deg_plus != deg_minus)
    throw std::logic_error("binomial is not homogeneous");
  if (vertex_plus != vertex_minus)
    throw std::logic_error("binomial violates the incidence relation");
  b.plus = std::move(plus);
  b.minus = std::move(minus);
  b.degree = deg_plus;
  return b;
}

}  // namespace

Binomial walk_binomial(const SimpleGraph& g, const Walk& w) {
  if (!w.closed() || w.length() % 2 != 0 || w.length() < 2)
    throw std::invalid_argument("walk must be closed and of even length");
  int m = g.edge_count();
  std::vector<int> plus(m, 0), minus(m, 0);
  for (int k = 0; k < w.length(); ++k) {
    int e = g.edge_index(w.vertices[k], w.vertices[k + 1]);
    if (e < 0) throw std::invalid_argument("walk edge not present in graph");
    if (k % 2 == 0)
      ++plus[e];
    else
      ++minus[e];
  }
  return make_binomial(g, std::move(plus), std::move(minus));
}

std::string to_string(const Binomial& b) {
  if (b.trivial) return "0";
  auto side = [](const std::vector<int>& exps) {
    std::string s;
    for (size_t e = 0; e < exps.size(); ++e) {
      if (exps[e] == 0) continue;
      if (!s.empty()) s += "*";
      s += "y" + std::to_string(e + 1);
      if (exps[e] > 1) s += "^" + std::to_string(exps[e]);
    }
    return s;
  };
  return side(b.plus) + " - " + side(b.minus);
}

namespace {

std::vector<int> walk_edge_sequence(const SimpleGraph& g, const Walk& w) {
  std::vector<int> seq;
  for (int k = 0; k < w.length(); ++k)
    seq.push_back(g.edge_index(w.vertices[k], w.vertices[k + 1]));
  return seq;
}

// Least rotation of the sequence or of its reversal: the walk's identity up
// to starting point and direction.
std::vector<int> canonical_walk_key(std::vector<int> seq) {
  std::vector<int> best;
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t s = 0; s < seq.size(); ++s) {
      std::vector<int> rot(seq.begin() + s, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

Walk rotate_cycle(const Cycle& c, int start_vertex, bool forward) {
  size_t pos = 0;
  while (c.vertices[pos] != start_vertex) ++pos;
  Walk w;
  int len = c.length();
  for (int k = 0; k <= len; ++k) {
    int idx = forward ? (pos + k) % len : (pos + len - k % len) % len;
    w.vertices.push_back(c.vertices[idx % len]);
  }
  return w;
}

int common_vertex_count(const Cycle& a, const Cycle& b, int n) {
  std::vector<bool> in_a(n + 1, false);
  for (int v : a.vertices) in_a[v] = true;
  int count = 0;
  for (int v : b.vertices) count += in_a[v];
  return count;
}

bool multiplicity_at_most_two(const Walk& w, int n) {
  std::vector<int> count(n + 1, 0);
  for (int k = 0; k < w.length(); ++k)
    if (++count[w.vertices[k]] > 2) return false;
  return true;
}

void all_paths(const SimpleGraph& g, int from, int to, int max_len,
               std::vector<std::vector<int>>& out) {
  std::vector<int> path = {from};
  std::vector<bool> used(g.vertex_count() + 1, false);
  used[from] = true;
  std::function<void(int)> dfs = [&](int v) {
    if (v == to) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) > max_len) return;
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = false;
    }
  };
  if (max_len >= 1) dfs(from);
}

}  // namespace

std::vector<Walk> primitive_walk_candidates(const SimpleGraph& g,
                                            int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max_degree must be >= 2");
  int n = g.vertex_count();
  int max_len = 2 * max_degree;
  std::vector<Cycle> cycles = enumerate_cycles(g, std::min(max_len, n));
  std::vector<Walk> result;
  // Key on both the walk (up to rotation/reflection) and its binomial:
  // traversing an odd-cycle lobe in either direction yields the same
  // f_Gamma, and such walks count as one candidate.
  std::set<std::vector<int>> seen_walks;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen_binomials;
  auto emit = [&](const Walk& w) {
    if (!seen_walks.insert(canonical_walk_key(walk_edge_sequence(g, w)))
             .second)
      return;
    Binomial b = walk_binomial(g, w);
    if (b.trivial) return;
    if (seen_binomials.insert({b.plus, b.minus}).second) result.push_back(w);
  };

  std::vector<const Cycle*> odd;
  for (const Cycle& c : cycles) {
    if (!c.odd()) {
      if (c.length() <= max_len) emit(rotate_cycle(c, c.vertices[0], true));
    } else {
      odd.push_back(&c);
    }
  }

  for (size_t i = 0; i < odd.size(); ++i) {
    for (size_t j = i + 1; j < odd.size(); ++j) {
      const Cycle &c1 = *odd[i], &c2 = *odd[j];
      int shared = common_vertex_count(c1, c2, n);
      int base = c1.length() + c2.length();
      if (shared == 1 && base <= max_len) {
        // Figure eight through the common vertex.
        int v = 0;
        {
          std::vector<bool> in1(n + 1, false);
          for (int u : c1.vertices) in1[u] = true;
          for (int u : c2.vertices)
            if (in1[u]) v = u;
        }
        for (bool dir : {true, false}) {
          Walk w = rotate_cycle(c1, v, true);
          Walk tail = rotate_cycle(c2, v, dir);
          w.vertices.insert(w.vertices.end(), tail.vertices.begin() + 1,
                            tail.vertices.end());
          if (multiplicity_at_most_two(w, n)) emit(w);
        }
      } else if (shared == 0 && base + 2 <= max_len) {
        // Two joining walks between any pair of cycle vertices.
        for (int v1 : c1.vertices) {
          for (int v2 : c2.vertices) {
            std::vector<std::vector<int>> paths;
            all_paths(g, v1, v2, max_len - base - 1, paths);
            for (const auto& p1 : paths) {
              for (const auto& p2 : paths) {
                int extra =
                    static_cast<int>(p1.size()) + static_cast<int>(p2.size()) - 2;
                if (extra % 2 != 0 || base + extra > max_len) continue;
                for (bool dir : {true, false}) {
                  Walk w = rotate_cycle(c1, v1, true);
                  w.vertices.insert(w.vertices.end(), p1.begin() + 1, p1.end());
                  Walk mid = rotate_cycle(c2, v2, dir);
                  w.vertices.insert(w.vertices.end(), mid.vertices.begin() + 1,
                                    mid.vertices.end());
                  w.vertices.insert(w.vertices.end(), p2.rbegin() + 1,
                                    p2.rend());
                  if (multiplicity_at_most_two(w, n)) emit(w);
                }
              }
            }
          }
        }
      }
    }
  }
  return result;
}

namespace {

// Fiber elements are packed into 64-bit keys: a monomial is its ascending
// edge-index sequence (5 bits per index), a multidegree its vertex degree
// sequence (5 bits per vertex). Limits checked by the caller.
using Key = std::uint64_t;

struct GeneratorMove {
  std::vector<int> plus, minus;
  std::vector<int> plus_support;
};

class FiberOracle {
 public:
  FiberOracle(const SimpleGraph& g, long long budget)
      : g_(g), m_(g.edge_count()), budget_(budget) {}

  // Returns the last degree whose fibers were fully processed.
  int run(int max_degree, std::vector<Binomial>* out) {
    int processed = 1;
    for (int deg = 2; deg <= max_degree; ++deg) {
      Int estimate = binomial(m_ + deg - 1, deg) *
                     Int(static_cast<long>(1 + 2 * moves_.size()));
      if (estimate > Int(static_cast<long>(budget_))) break;
      process_degree(deg, out);
      processed = deg;
      if (budget_ < 0) break;
    }
    return processed;
  }

 private:
  Key pack_counts(const std::vector<int>& counts, int degree) const {
    Key key = 0;
    int shift = 0;
    for (int e = 0; e < m_; ++e)
      for (int k = 0; k < counts[e]; ++k) {
        key |= static_cast<Key>(e) << shift;
        shift += 5;
      }
    (void)degree;
    return key;
  }

  void process_degree(int deg, std::vector<Binomial>* out) {
    std::vector<std::pair<Key, Key>> items;
    std::vector<int> idx(deg, 0);
    std::vector<int> vdeg(g_.vertex_count(), 0);
    // Odometer over ascending index sequences idx[0] <= ... <= idx[deg-1].
    while (true) {
      std::fill(vdeg.begin(), vdeg.end(), 0);
      Key ukey = 0;
      for (int k = 0; k < deg; ++k) {
        const auto& [u, v] = g_.edge(idx[k]);
        ++vdeg[u - 1];
        ++vdeg[v - 1];
        ukey |= static_cast<Key>(idx[k]) << (5 * k);
      }
      Key bkey = 0;
      for (int i = 0; i < g_.vertex_count(); ++i)
        bkey |= static_cast<Key>(vdeg[i]) << (5 * i);
      items.emplace_back(bkey, ukey);
      --budget_;
      int pos = deg - 1;
      while (pos >= 0 && idx[pos] == m_ - 1) --pos;
      if (pos < 0) break;
      int v = idx[pos] + 1;
      for (int k = pos; k < deg; ++k) idx[k] = v;
    }
    std::sort(items.begin(), items.end());
    size_t lo = 0;
    while (lo < items.size()) {
      size_t hi = lo;
      while (hi < items.size() && items[hi].first == items[lo].first) ++hi;
      if (hi - lo >= 2) process_fiber(items, lo, hi, deg, out);
      budget_ -= static_cast<long long>(hi - lo);
      lo = hi;
    }
  }

  void unpack(Key ukey, int deg, std::vector<int>& counts) const {
    std::fill(counts.begin(), counts.end(), 0);
    for (int k = 0; k < deg; ++k) ++counts[(ukey >> (5 * k)) & 31];
  }

  void process_fiber(const std::vector<std::pair<Key, Key>>& items, size_t lo,
                     size_t hi, int deg, std::vector<Binomial>* out) {
    size_t size = hi - lo;
    std::vector<int> parent(size);
    for (size_t i = 0; i < size; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<int> counts(m_), vcounts(m_);
    for (size_t i = 0; i < size; ++i) {
      unpack(items[lo + i].second, deg, counts);
      for (const GeneratorMove& mv : moves_) {
        --budget_;
        bool applies = true;
        for (int e : mv.plus_support)
          if (counts[e] < mv.plus[e]) {
            applies = false;
            break;
          }
        if (!applies) continue;
        vcounts = counts;
        for (int e = 0; e < m_; ++e) vcounts[e] += mv.minus[e] - mv.plus[e];
        Key vkey = pack_counts(vcounts, deg);
        auto it = std::lower_bound(
            items.begin() + lo, items.begin() + hi,
            std::make_pair(items[lo].first, vkey));
        if (it != items.begin() + hi && it->second == vkey) {
          int a = find(static_cast<int>(i));
          int b = find(static_cast<int>(it - (items.begin() + lo)));
          if (a != b) parent[a] = b;
        }
      }
    }
    // Components, each represented by its least element (items are sorted).
    std::vector<int> rep_of_root(size, -1);
    std::vector<int> reps;
    for (size_t i = 0; i < size; ++i) {
      int root = find(static_cast<int>(i));
      if (rep_of_root[root] < 0) {
        rep_of_root[root] = static_cast<int>(i);
        reps.push_back(static_cast<int>(i));
      }
    }
    if (reps.size() < 2) return;
    // The base component holds the fiber's least element; connect every
    // other component to it, in order of their least elements.
    int base = rep_of_root[find(0)];
    std::vector<int> u_counts(m_), v_counts(m_);
    unpack(items[lo + base].second, deg, v_counts);
    for (int rep : reps) {
      if (rep == base) continue;
      unpack(items[lo + rep].second, deg, u_counts);
      Binomial gen = make_binomial(g_, u_counts, v_counts);
      if (gen.trivial || gen.degree != deg)
        throw std::logic_error("fiber connector must be reduced of full degree");
      GeneratorMove mv;
      mv.plus = gen.plus;
      mv.minus = gen.minus;
      for (int e = 0; e < m_; ++e)
        if (gen.plus[e] > 0) mv.plus_support.push_back(e);
      moves_.push_back(std::move(mv));
      out->push_back(std::move(gen));
    }
  }

  const SimpleGraph& g_;
  int m_;
  long long budget_;
  std::vector<GeneratorMove> moves_;
};

}  // namespace

GeneratorProfile minimal_generators(const SimpleGraph& g, int max_degree,
                                    const FiberBudget& budget) {
  if (!g.connected())
    throw std::invalid_argument("generator oracle requires a connected graph");
  if (max_degree < 2) throw std::invalid_argument("max_degree must be >= 2");
  if (g.vertex_count() > 12 || g.edge_count() > 32)
    throw std::invalid_argument(
        "generator oracle supports at most 12 vertices and 32 edges");
  GeneratorProfile profile;
  profile.codimension = g.edge_count() - g.vertex_count() +
                        bipartite_components(g).bipartite_component_count;
  int cap = std::min(max_degree, 12);
  if (g.edge_count() == 0) {
    profile.max_degree_processed = cap;
    profile.complete = true;
    return profile;
  }
  FiberOracle oracle(g, budget.max_work);
  profile.max_degree_processed = oracle.run(cap, &profile.generators);
  // Generators of I_G have degree at most n: a primitive even closed walk
  // visits each vertex at most twice, so its length is at most 2n.
  profile.complete = profile.max_degree_processed >= g.vertex_count();
  for (const Binomial& b : profile.generators)
    ++profile.degree_histogram[b.degree];
  return profile;
}

Int eg_lower_bound(int c, int q) {
  if (c < 1 || q < 1) throw std::invalid_argument("need c >= 1 and q >= 1");
  return binomial(c + q - 1, c - 1);
}

}  // namespace edgering

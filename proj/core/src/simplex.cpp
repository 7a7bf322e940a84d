#include "edgering/simplex.hpp"

#include <stdexcept>

namespace edgering {

namespace {

// Dense tableau over exact rationals. Column layout: the original variables
// first, then one artificial per row. The reduced-cost row is kept explicit.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
      : rows_(A.size()), real_cols_(A.empty() ? 0 : A[0].size()) {
    cols_ = real_cols_ + rows_;
    t_.assign(rows_, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.resize(rows_);
    for (size_t i = 0; i < rows_; ++i) {
      int sign = b[i] >= 0 ? 1 : -1;
      for (size_t j = 0; j < real_cols_; ++j) t_[i][j] = sign * A[i][j];
      t_[i][cols_] = sign * b[i];
      t_[i][real_cols_ + i] = 1;
      basis_[i] = real_cols_ + i;
    }
  }

  // Minimizes the sum of the artificial variables. Returns the optimum.
  Rat phase1() {
    std::vector<Rat> cost(cols_ + 1, Rat(0));
    // Reduced costs of minimizing sum of artificials: subtract each row.
    for (size_t j = 0; j <= cols_; ++j)
      for (size_t i = 0; i < rows_; ++i) cost[j] -= t_[i][j];
    for (size_t j = real_cols_; j < cols_; ++j) cost[j] += 1;
    run(cost, real_cols_ + rows_);
    Rat value(0);
    for (size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= real_cols_) value += t_[i][cols_];
    return value;
  }

  // After a feasible phase 1: pivot lingering artificials out of the basis
  // (or detect their rows as redundant) and optimize the real objective
  // (minimization). Returns false when unbounded.
  bool phase2(const std::vector<Rat>& minimize) {
    for (size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < real_cols_) continue;
      size_t piv = cols_;
      for (size_t j = 0; j < real_cols_; ++j)
        if (t_[i][j] != 0) {
          piv = j;
          break;
        }
      if (piv == cols_) continue;  // redundant constraint row
      pivot(i, piv);
    }
    std::vector<Rat> cost(cols_ + 1, Rat(0));
    for (size_t j = 0; j < real_cols_; ++j) cost[j] = minimize[j];
    for (size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= real_cols_ || cost[basis_[i]] == 0) continue;
      Rat f = cost[basis_[i]];
      for (size_t j = 0; j <= cols_; ++j) cost[j] -= f * t_[i][j];
    }
    return run(cost, real_cols_);
  }

  Rat objective(const std::vector<Rat>& minimize) const {
    Rat v(0);
    for (size_t i = 0; i < rows_; ++i)
      if (basis_[i] < real_cols_) v += minimize[basis_[i]] * t_[i][cols_];
    return v;
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(real_cols_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
      if (basis_[i] < real_cols_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  void pivot(size_t prow, size_t pcol) {
    Rat pv = t_[prow][pcol];
    for (size_t j = 0; j <= cols_; ++j) t_[prow][j] /= pv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == prow || t_[i][pcol] == 0) continue;
      Rat f = t_[i][pcol];
      for (size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[prow][j];
    }
    basis_[prow] = pcol;
  }

  // Bland: entering = least-index column with negative reduced cost among
  // columns < usable_cols; leaving = least ratio, ties by least basis index.
  bool run(std::vector<Rat>& cost, size_t usable_cols) {
    while (true) {
      size_t enter = cols_;
      for (size_t j = 0; j < usable_cols; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      size_t leave = rows_;
      Rat best;
      for (size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows_) return false;  // unbounded
      Rat f = cost[enter] / t_[leave][enter];
      Rat pv = t_[leave][enter];
      for (size_t j = 0; j <= cols_; ++j) cost[j] -= f * t_[leave][j];
      pivot(leave, enter);
    }
  }

  size_t rows_, real_cols_, cols_;
  std::vector<std::vector<Rat>> t_;
  std::vector<size_t> basis_;
};

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c) {
  if (A.size() != b.size())
    throw std::invalid_argument("lp: row count mismatch");
  Tableau tab(A, b);
  if (tab.phase1() != 0)
    return {LpResult::Status::Infeasible, Rat(0), {}};
  std::vector<Rat> minimize(c.size());
  for (size_t j = 0; j < c.size(); ++j) minimize[j] = -c[j];
  if (!tab.phase2(minimize))
    return {LpResult::Status::Unbounded, Rat(0), {}};
  return {LpResult::Status::Optimal, -tab.objective(minimize),
          tab.solution()};
}

bool lp_feasible(const std::vector<std::vector<Rat>>& A,
                 const std::vector<Rat>& b) {
  Tableau tab(A, b);
  return tab.phase1() == 0;
}

}  // namespace edgering

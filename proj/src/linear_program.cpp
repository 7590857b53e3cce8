#include "degplus/linear_program.hpp"

#include <optional>

namespace degplus {

namespace {

class Tableau {
 public:
  Tableau(const Matrix& E, const std::vector<Rational>& rhs, std::size_t n)
      : rows_(E.size()), cols_(n + E.size()), t_(rows_, std::vector<Rational>(cols_ + 1)), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = rhs[i] < 0;
      for (std::size_t j = 0; j < n; ++j) t_[i][j] = flip ? Rational(-E[i][j]) : E[i][j];
      t_[i][n + i] = 1;
      t_[i][cols_] = flip ? Rational(-rhs[i]) : rhs[i];
      basis_[i] = n + i;
    }
  }

  // Returns false on unboundedness.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    // Bland's rule: lowest-index entering column, lowest-index leaving basis.
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          if (t_[i][j] != 0) r -= cost[basis_[i]] * t_[i][j];
        }
        if (r < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][j] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][j];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r]) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational factor = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= factor * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Pivots artificial columns (index >= n) out of the basis where possible;
  // rows where this fails are redundant and get dropped.
  void expel_artificials(std::size_t n) {
    for (std::size_t i = 0; i < rows_;) {
      if (basis_[i] < n) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n && !col; ++j) {
        if (t_[i][j] != 0) col = j;
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --rows_;
      }
    }
  }

  Rational value(std::size_t var) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] == var) return t_[i][cols_];
    }
    return 0;
  }

  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_form(const Matrix& E, const std::vector<Rational>& rhs, const std::vector<Rational>& cost) {
  const std::size_t m = E.size();
  const std::size_t n = m == 0 ? cost.size() : E.front().size();
  LpResult result;
  if (m == 0) {
    // Only x >= 0; the origin is optimal unless some cost is negative.
    result.x.assign(n, 0);
    for (const auto& c : cost) {
      if (c < 0) {
        result.status = LpStatus::Unbounded;
        return result;
      }
    }
    result.status = LpStatus::Optimal;
    result.objective = 0;
    return result;
  }
  Tableau tab(E, rhs, n);
  std::vector<Rational> phase1(tab.cols(), 0);
  for (std::size_t j = n; j < tab.cols(); ++j) phase1[j] = 1;
  std::vector<bool> all(tab.cols(), true);
  tab.optimize(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t j = n; j < tab.cols(); ++j) infeasibility += tab.value(j);
  if (infeasibility > 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tab.expel_artificials(n);
  if (!cost.empty()) {
    std::vector<Rational> phase2(tab.cols(), 0);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
    std::vector<bool> original(tab.cols(), false);
    for (std::size_t j = 0; j < n; ++j) original[j] = true;
    if (!tab.optimize(phase2, original)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }
  result.status = LpStatus::Optimal;
  result.x.resize(n);
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = tab.value(j);
    if (!cost.empty()) result.objective += cost[j] * result.x[j];
  }
  return result;
}

bool in_conic_hull(const std::vector<std::vector<Rational>>& generators, const std::vector<Rational>& target) {
  const std::size_t dim = target.size();
  if (generators.empty()) {
    for (const auto& v : target) {
      if (v != 0) return false;
    }
    return true;
  }
  Matrix E(dim, std::vector<Rational>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) E[i][j] = generators[j][i];
  }
  return solve_standard_form(E, target).status == LpStatus::Optimal;
}

}  // namespace degplus

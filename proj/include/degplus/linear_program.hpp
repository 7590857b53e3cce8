#pragma once

#include <cstddef>
#include <vector>

#include "degplus/matrix.hpp"

namespace degplus {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Minimizes cost.x subject to E x = rhs, x >= 0, by a two-phase dense
/// simplex over Q with Bland's rule. An empty cost vector means any feasible
/// vertex will do.
LpResult solve_standard_form(const Matrix& E, const std::vector<Rational>& rhs, const std::vector<Rational>& cost = {});

/// Is `target` a nonnegative combination of `generators` (all vectors of the
/// same length)?
bool in_conic_hull(const std::vector<std::vector<Rational>>& generators, const std::vector<Rational>& target);

}  // namespace degplus

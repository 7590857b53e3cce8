#include "degplus/search.hpp"

#include "degplus/bounds.hpp"
#include "degplus/error.hpp"
#include "degplus/linear_program.hpp"
#include "degplus/roots.hpp"

namespace degplus {

namespace {

Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "p(0) must be nonzero");
  return monic(p);
}

ConstraintSystem product_system(const Polynomial& q, std::size_t m, std::size_t unknowns) {
  ConstraintSystem sys;
  sys.A.assign(m + 1, std::vector<Rational>(unknowns));
  sys.b.assign(m + 1, 0);
  const std::size_t d = q.degree();
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t i = 0; i < unknowns && i <= j; ++i) {
      if (j - i <= d) sys.A[j][i] = q[j - i];
    }
  }
  return sys;
}

// A h + b >= 0 where the top square block of A is lower triangular with a
// nonzero diagonal. Substituting g = (top rows of A h + b) >= 0 leaves
// C g + e >= 0 on the remaining rows.
struct Reduced {
  Matrix S;  // inverse of the top block
  Matrix C;
  std::vector<Rational> e;
};

Reduced reduce(const ConstraintSystem& sys) {
  const std::size_t k = sys.A.empty() ? 0 : sys.A.front().size();
  const std::size_t rows = sys.A.size();
  Reduced red;
  red.S.assign(k, std::vector<Rational>(k));
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t i = col; i < k; ++i) {
      Rational acc = i == col ? 1 : 0;
      for (std::size_t l = col; l < i; ++l) {
        if (sys.A[i][l] != 0 && red.S[l][col] != 0) acc -= sys.A[i][l] * red.S[l][col];
      }
      red.S[i][col] = acc / sys.A[i][i];
    }
  }
  red.C.assign(rows - k, std::vector<Rational>(k));
  red.e.assign(rows - k, 0);
  for (std::size_t r = 0; r < rows - k; ++r) {
    const auto& arow = sys.A[k + r];
    for (std::size_t col = 0; col < k; ++col) {
      Rational acc = 0;
      for (std::size_t l = col; l < k; ++l) {
        if (arow[l] != 0 && red.S[l][col] != 0) acc += arow[l] * red.S[l][col];
      }
      red.C[r][col] = acc;
    }
    Rational acc = sys.b[k + r];
    for (std::size_t col = 0; col < k; ++col) acc -= red.C[r][col] * sys.b[col];
    red.e[r] = acc;
  }
  return red;
}

enum class Want { Both, WitnessOnly, FarkasOnly };

struct Solved {
  bool feasible = false;
  std::vector<Rational> h;  // unknowns of the original system
  std::vector<Rational> farkas;
};

Solved solve(const ConstraintSystem& sys, Want want = Want::Both) {
  const std::size_t k = sys.A.empty() ? 0 : sys.A.front().size();
  const std::size_t r = sys.A.size() - k;
  const Reduced red = reduce(sys);
  Solved out;
  // Variables (g, t): C g - t = -e.
  if (want != Want::FarkasOnly) {
    Matrix E(r, std::vector<Rational>(k + r));
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) E[i][j] = red.C[i][j];
      E[i][k + i] = -1;
      rhs[i] = -red.e[i];
    }
    // Minimizing the coefficient sum of the product picks a canonical vertex.
    std::vector<Rational> cost(k + r, 0);
    for (std::size_t j = 0; j < k; ++j) {
      cost[j] = 1;
      for (std::size_t i = 0; i < r; ++i) cost[j] += red.C[i][j];
    }
    const LpResult lp = solve_standard_form(E, rhs, cost);
    if (lp.status != LpStatus::Infeasible) {
      out.feasible = true;
      out.h.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          const Rational g = lp.x[j] - sys.b[j];
          if (g != 0 && red.S[i][j] != 0) out.h[i] += red.S[i][j] * g;
        }
      }
      return out;
    }
  }
  if (want == Want::WitnessOnly) return out;
  // Farkas: z >= 0 with C^T z <= 0 and e^T z = -1; y = (-C^T z, z).
  Matrix E(k + 1, std::vector<Rational>(r + k));
  std::vector<Rational> rhs(k + 1, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < r; ++i) E[j][i] = red.C[i][j];
    E[j][r + j] = 1;
  }
  for (std::size_t i = 0; i < r; ++i) E[k][i] = -red.e[i];
  rhs[k] = 1;
  const LpResult lp = solve_standard_form(E, rhs);
  if (lp.status != LpStatus::Optimal) throw std::logic_error("Farkas system unexpectedly infeasible");
  out.farkas.assign(k + r, 0);
  for (std::size_t j = 0; j < k; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc -= red.C[i][j] * lp.x[i];
    out.farkas[j] = acc;
  }
  for (std::size_t i = 0; i < r; ++i) out.farkas[k + i] = lp.x[i];
  if (!verify_farkas(sys, out.farkas)) throw std::logic_error("Farkas certificate failed verification");
  return out;
}

FeasibilityOutcome monic_outcome(const Polynomial& q, std::size_t m, Want want = Want::Both) {
  const ConstraintSystem sys = monic_system(q, m);
  Solved s = solve(sys, want);
  if (!s.feasible) return Infeasible{std::move(s.farkas)};
  s.h.emplace_back(1);
  return Witness{Polynomial(std::move(s.h))};
}

void check_preconditions(const Polynomial& p, std::size_t m) {
  const Polynomial q = normalized(p);
  if (m < q.degree()) throw Error(ErrorCode::DegreeTooSmall, "m must be at least deg(p)");
  if (classify(q) == PositivityClass::HasPositiveRealRoot) {
    throw Error(ErrorCode::WrongClass, "p has a positive real root");
  }
}

}  // namespace

ConstraintSystem monic_system(const Polynomial& p, std::size_t m) {
  const Polynomial q = normalized(p);
  const std::size_t d = q.degree();
  if (m < d) throw Error(ErrorCode::DegreeTooSmall, "m must be at least deg(p)");
  const std::size_t k = m - d;
  ConstraintSystem sys = product_system(q, m, k);
  for (std::size_t j = k; j <= m; ++j) sys.b[j] = q[j - k];
  return sys;
}

ConstraintSystem strict_system(const Polynomial& p, std::size_t m) {
  const Polynomial q = normalized(p);
  const std::size_t d = q.degree();
  if (m < d) throw Error(ErrorCode::DegreeTooSmall, "m must be at least deg(p)");
  ConstraintSystem sys = product_system(q, m, m - d + 1);
  for (auto& v : sys.b) v = -1;
  return sys;
}

FeasibilityOutcome feasible_at(const Polynomial& p, std::size_t m) {
  check_preconditions(p, m);
  return monic_outcome(normalized(p), m);
}

FeasibilityOutcome strict_witness(const Polynomial& p, std::size_t m) {
  check_preconditions(p, m);
  Solved s = solve(strict_system(p, m));
  if (!s.feasible) return Infeasible{std::move(s.farkas)};
  return Witness{Polynomial(std::move(s.h))};
}

bool verify_farkas(const ConstraintSystem& sys, const std::vector<Rational>& y) {
  if (y.size() != sys.A.size()) return false;
  const std::size_t k = sys.A.empty() ? 0 : sys.A.front().size();
  for (const auto& v : y) {
    if (v < 0) return false;
  }
  for (std::size_t j = 0; j < k; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) acc += y[i] * sys.A[i][j];
    if (acc != 0) return false;
  }
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * sys.b[i];
  return yb < 0;
}

bool verify_farkas(const Polynomial& p, std::size_t m, const std::vector<Rational>& y) {
  const auto split = strip_x_power(p);
  if (m < split.power) return false;
  return verify_farkas(monic_system(split.rest, m - split.power), y);
}

DegPlusResult deg_plus(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "deg+ of the zero polynomial");
  const auto split = strip_x_power(p);
  const Polynomial& q = split.rest;
  if (classify(q) == PositivityClass::HasPositiveRealRoot) {
    return InfiniteDegPlus{*isolate_positive_root(q)};
  }
  const Polynomial qn = monic(q);
  const std::size_t d = qn.degree();
  DegPlusCertificate cert;
  cert.stripped_x_power = split.power;
  std::size_t found = d;
  Polynomial h = Polynomial::constant(1);
  if (!qn.has_nonnegative_coeffs()) {
    std::optional<std::size_t> limit;
    try {
      limit = upper_structural(qn);
    } catch (const Error&) {
    }
    std::size_t start = d;
    try {
      const std::size_t cap = limit ? *limit + d : 100000;
      start = std::max(lower_recurrence_up(qn, cap), lower_recurrence_down(qn, cap));
    } catch (const Error&) {
    }
    const auto parts = squarefree_decomposition(qn);
    if (parts.size() == 1 && parts.front().factor.degree() == 2) {
      start = std::max(start, power_bounds(parts.front().factor, parts.front().multiplicity).first);
    }
    cert.search_start = start;
    const std::size_t stop = limit ? std::max(*limit, start) : start + 100000;
    std::optional<Polynomial> best;
    for (std::size_t m = start; !best; ++m) {
      if (m > stop) throw Error(ErrorCode::CapExceeded, "no nonnegative multiple found below the upper bound");
      auto outcome = monic_outcome(qn, m, Want::WitnessOnly);
      if (auto* w = std::get_if<Witness>(&outcome)) {
        best = std::move(w->h);
        found = m;
      }
    }
    h = std::move(*best);
    if (found > d) cert.farkas_below = std::get<Infeasible>(monic_outcome(qn, found - 1, Want::FarkasOnly)).farkas;
  } else {
    cert.search_start = d;
  }
  const std::size_t k = split.power;
  cert.deg_plus = found + k;
  cert.search_start += k;
  cert.D = found - d;
  cert.witness = h * (Rational(1) / p.leading());
  cert.product = cert.witness * p;
  return cert;
}

DegPlusCertificate deg_plus_finite(const Polynomial& p) {
  auto r = deg_plus(p);
  if (auto* inf = std::get_if<InfiniteDegPlus>(&r)) {
    throw Error(ErrorCode::InfiniteDegPlus, "p has a positive real root in (" + to_string(inf->root_interval.first) +
                                                ", " + to_string(inf->root_interval.second) + "]");
  }
  return std::get<DegPlusCertificate>(std::move(r));
}

PolyaResult polya_exponent(const Polynomial& p, std::size_t cap) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Polya exponent of zero");
  if (classify(p) == PositivityClass::HasPositiveRealRoot) {
    throw Error(ErrorCode::WrongClass, "p has a positive real root");
  }
  PolyaResult out{0, sign_normalize(p)};
  const Polynomial step({1, 1});
  while (!out.product.has_nonnegative_coeffs()) {
    if (out.k >= cap) throw Error(ErrorCode::CapExceeded, "Polya exponent exceeds cap " + std::to_string(cap));
    out.product = out.product * step;
    ++out.k;
  }
  return out;
}

}  // namespace degplus

#include "degplus/cone.hpp"

#include <algorithm>

#include "degplus/error.hpp"
#include "degplus/linear_program.hpp"
#include "degplus/matrix.hpp"

namespace degplus {

namespace {

struct Ray {
  std::vector<Rational> g;
  std::vector<bool> active;  // constraints with zero slack
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

// Rays of {g >= 0, rows . g >= 0} in dimension dim.
std::vector<std::vector<Rational>> double_description(std::size_t dim, const Matrix& rows) {
  Matrix constraints;
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> unit(dim, 0);
    unit[i] = 1;
    constraints.push_back(unit);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Ray r{constraints[i], std::vector<bool>(dim, true)};
    r.active[i] = false;
    rays.push_back(std::move(r));
  }
  for (const auto& row : rows) {
    const std::size_t idx = constraints.size();
    constraints.push_back(row);
    std::vector<Rational> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(row, rays[i].g);
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] >= 0) {
        Ray r = rays[i];
        r.active.push_back(value[i] == 0);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (value[j] >= 0) continue;
        Matrix common;
        for (std::size_t c = 0; c < idx; ++c) {
          if (rays[i].active[c] && rays[j].active[c]) common.push_back(constraints[c]);
        }
        if (common.size() + 2 < dim) continue;
        if (rank(common) + 2 != dim) continue;
        Ray r;
        r.g.resize(dim);
        for (std::size_t t = 0; t < dim; ++t) r.g[t] = value[i] * rays[j].g[t] - value[j] * rays[i].g[t];
        r.active.resize(idx + 1);
        for (std::size_t c = 0; c < idx; ++c) r.active[c] = rays[i].active[c] && rays[j].active[c];
        r.active[idx] = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }
  std::vector<std::vector<Rational>> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.g));
  return out;
}

void sort_unique(std::vector<Polynomial>& rays) {
  std::sort(rays.begin(), rays.end(), ray_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

}  // namespace

bool ray_less(const Polynomial& a, const Polynomial& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

ConeGenerators cone_generators(const Polynomial& p, std::size_t n) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cone of the zero polynomial");
  const auto split = strip_x_power(p);
  const Polynomial q = monic(split.rest);
  const std::size_t d = q.degree();
  const std::size_t dim = n + 1;
  // f = A h with A[j][i] = q_{j-i}; g = top dim rows of f, so
  // h = S g with S the inverse of the lower-triangular top block.
  Matrix S(dim, std::vector<Rational>(dim));
  const Rational inv0 = 1 / q[0];
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t i = col; i < dim; ++i) {
      Rational acc = i == col ? 1 : 0;
      for (std::size_t l = col; l < i; ++l) {
        if (i - l <= d && S[l][col] != 0) acc -= q[i - l] * S[l][col];
      }
      S[i][col] = acc * inv0;
    }
  }
  Matrix C(d, std::vector<Rational>(dim));
  for (std::size_t r = 0; r < d; ++r) {
    const std::size_t j = dim + r;
    for (std::size_t col = 0; col < dim; ++col) {
      Rational acc = 0;
      for (std::size_t l = col; l < dim; ++l) {
        if (j - l <= d && S[l][col] != 0) acc += q[j - l] * S[l][col];
      }
      C[r][col] = acc;
    }
  }
  ConeGenerators out;
  out.n = n;
  const Polynomial shift = Polynomial::monomial(1, split.power);
  for (const auto& g : double_description(dim, C)) {
    std::vector<Rational> f(g);
    for (std::size_t r = 0; r < d; ++r) f.push_back(dot(C[r], g));
    out.rays.push_back(primitive_integer(Polynomial(std::move(f)) * shift));
  }
  sort_unique(out.rays);
  return out;
}

std::vector<Polynomial> least_generating_set(const Polynomial& p, std::size_t degree_budget) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cone of the zero polynomial");
  if (degree_budget < p.degree()) throw Error(ErrorCode::BudgetTooSmall, "budget below deg(p)");
  std::vector<Polynomial> all;
  for (std::size_t n = 0; n + p.degree() <= degree_budget; ++n) {
    for (auto& r : cone_generators(p, n).rays) all.push_back(std::move(r));
  }
  sort_unique(all);
  std::vector<Polynomial> kept;
  for (const auto& f : all) {
    const auto fs = strip_x_power(f);
    bool multiple = false;
    for (const auto& g : all) {
      if (&g == &f) continue;
      const auto gs = strip_x_power(g);
      if (gs.power < fs.power && gs.rest == fs.rest) {
        multiple = true;
        break;
      }
    }
    if (!multiple) kept.push_back(f);
  }
  return kept;
}

bool rays_are_extremal(const std::vector<Polynomial>& rays) {
  std::size_t len = 0;
  for (const auto& r : rays) len = std::max(len, r.size());
  auto vec = [len](const Polynomial& r) {
    std::vector<Rational> v(len, 0);
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i];
    return v;
  };
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<std::vector<Rational>> others;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != i) others.push_back(vec(rays[j]));
    }
    if (in_conic_hull(others, vec(rays[i]))) return false;
  }
  return true;
}

}  // namespace degplus

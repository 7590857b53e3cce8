#include "degplus/star.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

#include "degplus/angle.hpp"
#include "degplus/error.hpp"
#include "degplus/search.hpp"

namespace degplus {

std::optional<std::size_t> capital_D(const Polynomial& p) {
  const auto r = deg_plus(p);
  if (const auto* c = std::get_if<DegPlusCertificate>(&r)) return c->D;
  return std::nullopt;
}

TruncationCheck truncation_check(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "truncation check of zero");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "truncation check needs p(0) != 0");
  const auto D = capital_D(p);
  if (!D) throw Error(ErrorCode::InfiniteDegPlus, "p has a positive real root");
  TruncationCheck out;
  out.D = *D;
  out.product = p * truncated_inverse(p, *D).as_polynomial();
  out.nonneg = out.product.has_nonnegative_coeffs();
  return out;
}

StarReport property_star(const Polynomial& p, const std::vector<Polynomial>& factors) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "property check of zero");
  Polynomial product = Polynomial::constant(1);
  for (const auto& f : factors) product *= f;
  if (factors.empty() || product != p) {
    throw Error(ErrorCode::FactorizationMismatch, "the factors do not multiply to p");
  }
  StarReport rep;
  rep.factors = factors;
  const auto total = capital_D(p);
  if (!total) throw Error(ErrorCode::InfiniteDegPlus, "p has a positive real root");
  rep.total_D = *total;
  bool all_nonneg = true;
  std::size_t sum = 0;
  for (const auto& f : factors) {
    const TruncationCheck t = truncation_check(f);
    rep.per_factor_D.push_back(t.D);
    rep.truncation_products.push_back(t.product);
    all_nonneg = all_nonneg && t.nonneg;
    sum += t.D;
  }
  rep.additivity_holds = sum == rep.total_D;
  rep.verdict = rep.additivity_holds && all_nonneg;
  return rep;
}

StarSearch property_star_auto(const Polynomial& p, const std::vector<Polynomial>& supplied) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "property check of zero");
  std::vector<std::vector<Polynomial>> candidates{{p}};
  if (!supplied.empty()) candidates.push_back(supplied);
  const auto parts = squarefree_decomposition(p);
  const Rational lead = p.leading();
  // Every repeated factor split into copies.
  std::vector<Polynomial> split;
  // Repeated factors kept together as powers.
  std::vector<Polynomial> grouped;
  for (const auto& part : parts) {
    for (unsigned i = 0; i < part.multiplicity; ++i) split.push_back(part.factor);
    grouped.push_back(pow(part.factor, part.multiplicity));
  }
  if (!split.empty()) {
    split.front() *= lead;
    grouped.front() *= lead;
    candidates.push_back(split);
    candidates.push_back(grouped);
  }
  StarSearch out;
  std::set<std::string> seen;
  for (const auto& factors : candidates) {
    std::string key;
    for (const auto& f : factors) key += to_string(f) + ";";
    if (!seen.insert(key).second) continue;
    out.attempts.push_back(property_star(p, factors));
    if (out.attempts.back().verdict) {
      out.established = true;
      break;
    }
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> grid_points(const ScanGrid& grid) {
  auto values = [&](const Rational& lo, const Rational& hi) {
    std::set<Rational> out;
    for (unsigned q = 1; q <= grid.denominator_bound; ++q) {
      const Integer first = ceil(lo * q);
      const Integer last = floor(hi * q);
      for (Integer n = first; n <= last; ++n) {
        Rational v(n, q);
        v.canonicalize();
        out.insert(v);
      }
    }
    return out;
  };
  std::vector<std::pair<Rational, Rational>> points;
  const auto as = values(grid.a_min, grid.a_max);
  const auto bs = values(grid.b_min, grid.b_max);
  for (const auto& a : as) {
    if (a >= 0) continue;
    for (const auto& b : bs) {
      if (a * a < 4 * b) points.emplace_back(a, b);
    }
  }
  return points;
}

namespace {

ScanRow scan_row(const Rational& a, const Rational& b, unsigned k, bool star, const PrecisionPolicy& policy) {
  const Polynomial p({b, a, 1});
  const Polynomial pk = pow(p, k);
  ScanRow row;
  row.a = a;
  row.b = b;
  row.k = k;
  row.deg_plus = deg_plus_finite(pk).deg_plus;
  AngleOracle oracle(p, policy);
  const auto c = oracle.ceil_ratio(k, Conservative::High);
  row.bound = static_cast<std::size_t>(c.value.get_ui()) + 1;
  row.bound_conservative = !c.exact;
  row.slack = static_cast<long>(row.bound) - static_cast<long>(row.deg_plus);
  if (star) row.verdict = property_star(pk, std::vector<Polynomial>(k, p)).verdict;
  return row;
}

ScanResult run_scan(const ScanGrid& grid, unsigned jobs, const RowSink& sink, const PrecisionPolicy& policy,
                    bool star) {
  const auto points = grid_points(grid);
  if (points.empty() || grid.k_max == 0) throw Error(ErrorCode::EmptyGrid, "scan grid has no admissible points");
  struct Task {
    std::size_t point;
    unsigned k;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (unsigned k = 1; k <= grid.k_max; ++k) tasks.push_back({i, k});
  }
  std::vector<std::optional<ScanRow>> done(tasks.size());
  std::size_t flushed = 0;
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        ScanRow row = scan_row(points[tasks[t].point].first, points[tasks[t].point].second, tasks[t].k, star, policy);
        std::lock_guard<std::mutex> lock(mu);
        done[t] = std::move(row);
        while (flushed < done.size() && done[flushed]) {
          if (sink) sink(*done[flushed]);
          ++flushed;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(tasks.size());
        return;
      }
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  ScanResult out;
  out.grid = grid;
  for (auto& row : done) {
    const bool violation = star ? !*row->verdict : row->slack < 0;
    if (violation) out.violations.push_back(*row);
    out.rows.push_back(std::move(*row));
  }
  return out;
}

}  // namespace

ScanResult conjecture_scan(const ScanGrid& grid, unsigned jobs, const RowSink& sink, const PrecisionPolicy& policy) {
  return run_scan(grid, jobs, sink, policy, false);
}

ScanResult star_conjecture_scan(const ScanGrid& grid, unsigned jobs, const RowSink& sink,
                                const PrecisionPolicy& policy) {
  return run_scan(grid, jobs, sink, policy, true);
}

std::string csv_header(bool with_verdict) {
  return with_verdict ? "a,b,k,deg_plus,bound,slack,verdict" : "a,b,k,deg_plus,bound,slack";
}

std::string csv_row(const ScanRow& row, bool with_verdict) {
  std::string out = to_string(row.a) + "," + to_string(row.b) + "," + std::to_string(row.k) + "," +
                    std::to_string(row.deg_plus) + "," + std::to_string(row.bound) + "," + std::to_string(row.slack);
  if (with_verdict) out += row.verdict ? (*row.verdict ? ",true" : ",false") : ",";
  return out;
}

}  // namespace degplus

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "degplus/angle.hpp"
#include "degplus/bounds.hpp"
#include "degplus/cone.hpp"
#include "degplus/error.hpp"
#include "degplus/sampling.hpp"
#include "degplus/search.hpp"
#include "degplus/star.hpp"

using namespace degplus;

namespace {

// Collects the first few failure notes for a criterion.
struct Check {
  bool ok = true;
  std::ostringstream notes;
  int noted = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (noted++ < 5) notes << (noted > 1 ? "; " : "") << what;
  }
};

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }
Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string sz(std::size_t v) { return std::to_string(v); }

// Polynomials shared by criteria 6, 7 and 8.
std::vector<Polynomial> g_quadratics;
std::vector<Polynomial> g_cubics;

void criterion1(Check& c) {
  const std::vector<std::pair<Polynomial, std::size_t>> golden{
      {P({1, -1, 1}), 3}, {P({Q(1, 2), -1, 1}), 4}, {P({3, -1, 1}), 3}};
  for (const auto& [p, want] : golden) {
    const std::size_t closed = exact_quadratic(p).value;
    const std::size_t lp = deg_plus_finite(p).deg_plus;
    c.expect(closed == want && lp == want,
             to_string(p) + ": closed " + sz(closed) + ", LP " + sz(lp) + ", want " + sz(want));
  }
}

void criterion2(Check& c) {
  const Polynomial q({3, -1, 1});
  const Polynomial p = mul(q, q);
  const DegPlusCertificate cert = deg_plus_finite(p);
  c.expect(cert.deg_plus == 6, "deg+ = " + sz(cert.deg_plus));
  c.expect(cert.farkas_below.has_value() && verify_farkas(p, 5, *cert.farkas_below),
           "no verified Farkas certificate at degree 5");
  c.expect(std::holds_alternative<Infeasible>(feasible_at(p, 5)), "degree 5 feasible");
  for (long cv : {1, 2, 3}) {
    const Rational t(cv);
    const Polynomial expected({9 * t, 9 - 6 * t, 7 * t - 6, 7 - 2 * t, t - 2, 1});
    c.expect(mul(P({t, 1}), p) == expected, "expansion differs at c = " + std::to_string(cv));
  }
}

void criterion3(Check& c) {
  const Polynomial lin({Q(1, 2), 1});
  const Polynomial quad({1, Q(-3, 2), 1});
  const Polynomial p = mul(lin, quad);
  c.expect(deg_plus_finite(p).deg_plus == 5, "deg+ != 5");
  c.expect(mul(P({Q(3, 4), 1, 1}), p) == P({Q(3, 8), Q(11, 16), 0, 0, 0, 1}), "(x^2+x+3/4) p mismatch");
  const auto series = truncated_inverse(p, 3).coeffs;
  c.expect(series == std::vector<Rational>{2, -1, Q(9, 2), Q(-33, 4)}, "truncated inverse coefficients");
  c.expect(mul(p, truncated_inverse(p, 2).as_polynomial()) == P({1, 0, 0, Q(33, 8), Q(-11, 2), Q(9, 2)}),
           "p (1/p)_2 mismatch");
  const StarReport r = property_star(p, {lin, quad});
  std::size_t sum = 0;
  for (auto d : r.per_factor_D) sum += d;
  c.expect(!r.verdict, "property (*) verdict true");
  c.expect(r.total_D == 2 && sum == 3, "D(p) = " + sz(r.total_D) + ", factor sum " + sz(sum));
}

void criterion4(Check& c) {
  const Polynomial q({1, -1, 1});
  for (unsigned k = 1; k <= 3; ++k) {
    const std::size_t v = deg_plus_finite(pow(q, k)).deg_plus;
    c.expect(v == 3 * k, "k = " + std::to_string(k) + ": deg+ = " + sz(v));
  }
}

void criterion5(Check& c) {
  const Polynomial q({Q(1, 2), -1, 1});
  const Polynomial p = mul(q, q);
  c.expect(truncated_inverse(p, 4).coeffs == std::vector<Rational>{4, 16, 32, 32, -16}, "series coefficients");
  c.expect(!truncation_check(p).nonneg, "truncation_check nonneg");
  c.expect(property_star(p, {q, q}).verdict, "property (*) with [q, q] false");
}

void criterion6(Check& c) {
  Rng rng(20240601);
  for (int i = 0; i < 200; ++i) g_quadratics.push_back(random_quadratic(rng, 20));
  std::size_t disagreements = 0;
  for (const auto& q : g_quadratics) {
    const std::size_t closed = exact_quadratic(q).value;
    const std::size_t lp = deg_plus_finite(q).deg_plus;
    if (closed != lp) {
      ++disagreements;
      c.expect(false, to_string(q) + ": closed " + sz(closed) + ", LP " + sz(lp));
    }
  }
  c.notes << (c.ok ? "" : "; ") << g_quadratics.size() << " quadratics, " << disagreements << " disagreements";
}

void criterion7(Check& c) {
  Rng rng(20240602);
  for (int i = 0; i < 100; ++i) g_cubics.push_back(random_cubic(rng, 20));
  const auto near = near_criterion_cubics();
  g_cubics.insert(g_cubics.end(), near.begin(), near.end());
  c.expect(near.size() >= 10, "only " + sz(near.size()) + " near-equality cubics");
  std::size_t disagreements = 0;
  for (const auto& p : g_cubics) {
    const CubicResult r = exact_cubic(p);
    const std::size_t lp = deg_plus_finite(p).deg_plus;
    if (r.value != lp || !r.consistent) {
      ++disagreements;
      c.expect(false, to_string(p) + ": closed " + sz(r.value) + ", LP " + sz(lp));
    }
  }
  c.notes << (c.ok ? "" : "; ") << g_cubics.size() << " cubics (" << near.size() << " near equality), "
          << disagreements << " disagreements";
}

void criterion8(Check& c) {
  std::vector<Polynomial> base = g_quadratics;
  base.insert(base.end(), g_cubics.begin(), g_cubics.end());
  std::size_t checked = 0;
  for (const auto& b : base) {
    for (unsigned k = 1; k <= 3; ++k) {
      const Polynomial p = pow(b, k);
      const std::size_t exact = deg_plus_finite(p).deg_plus;
      const std::size_t lower = std::max(lower_recurrence_up(p), lower_recurrence_down(p));
      const std::size_t upper = upper_structural(p);
      c.expect(lower <= exact && exact <= upper, to_string(b) + "^" + std::to_string(k) + ": " + sz(lower) +
                                                     " <= " + sz(exact) + " <= " + sz(upper) + " fails");
      try {
        const std::size_t turan = upper_turan(p);
        c.expect(exact <= turan, to_string(b) + "^" + std::to_string(k) + ": Turan " + sz(turan));
      } catch (const Error& e) {
        c.expect(e.code() == ErrorCode::AngleTooLarge, std::string("Turan: ") + e.what());
      }
      ++checked;
    }
  }
  const Polynomial quad({1, Q(-6, 5), 1});
  const Polynomial p = mul(mul(P({2, 1}), P({Q(1, 2), 1})), quad);
  const std::size_t up = lower_recurrence_up(p);
  const std::size_t down = lower_recurrence_down(p);
  const std::size_t exact = deg_plus_finite(p).deg_plus;
  AngleOracle oracle(quad);
  const auto angle = oracle.ceil_ratio(1, Conservative::Low);
  c.expect(up == 4 && down == 4, "quartic: n_up " + sz(up) + ", n_down " + sz(down));
  c.expect(angle.exact && Rational(angle.value) <= Rational(static_cast<long>(exact)),
           "quartic: deg+ " + sz(exact) + " below ceil(pi/phi)");
  c.notes << (c.ok ? "" : "; ") << checked << " polynomials; quartic n_up = n_down = " << up << ", deg+ = " << exact
          << ", ceil(pi/phi) = " << angle.value.get_str();
}

void criterion9(Check& c) {
  const Polynomial p({3, -1, 1});
  const std::size_t estim = upper_estim(p, EstimKind::Mahler);
  const std::size_t zaimi = upper_zaimi(p);
  const double ratio = static_cast<double>(zaimi) / static_cast<double>(estim);
  c.expect(estim == 16, "estim = " + sz(estim));
  c.expect(3.5 <= ratio && ratio <= 4.5, "ratio " + std::to_string(ratio));
  c.notes << (c.ok ? "" : "; ") << "estim " << estim << ", zaimi " << zaimi << ", ratio " << ratio;
}

void criterion10(Check& c) {
  const Polynomial p({1, -1, 1});
  c.expect(cone_generators(p, 1).rays == std::vector<Polynomial>{P({1, 0, 0, 1})}, "n = 1 rays");
  c.expect(cone_generators(p, 0).rays.empty(), "n = 0 rays nonempty");
  Rng rng(20240603);
  std::size_t rays_checked = 0;
  for (int i = 0; i < 20; ++i) {
    const Polynomial q = i % 2 == 0 ? random_quadratic(rng, 4) : random_cubic(rng, 4);
    const std::size_t dp = deg_plus_finite(q).deg_plus;
    const std::size_t n = std::min<std::size_t>(6, dp - q.degree() + 2);
    const auto rays = cone_generators(q, n).rays;
    rays_checked += rays.size();
    c.expect(rays_are_extremal(rays), to_string(q) + ": a ray is not extremal");
    if (dp - q.degree() <= n) {
      std::size_t least = rays.empty() ? 0 : rays.front().degree();
      for (const auto& r : rays) least = std::min(least, r.degree());
      c.expect(!rays.empty() && least == dp, to_string(q) + ": minimal ray degree " + sz(least) + ", deg+ " + sz(dp));
    }
  }
  c.notes << (c.ok ? "" : "; ") << "20 polynomials, " << rays_checked << " rays";
}

void criterion11(Check& c) {
  const PolyaResult a = polya_exponent(P({Q(1, 2), -1, 1}));
  c.expect(a.k == 4 && a.product.degree() == 6, "x^2 - x + 1/2: k = " + sz(a.k));
  c.expect(a.product.degree() > deg_plus_finite(P({Q(1, 2), -1, 1})).deg_plus, "product degree not above deg+");
  c.expect(polya_exponent(P({3, -1, 1})).k == 1, "x^2 - x + 3: k != 1");
}

void criterion12(Check& c) {
  const ScanGrid grid{-2, Q(-1, 3), Q(1, 4), 3, 3, 3};
  const std::size_t points = grid_points(grid).size();
  c.expect(points >= 50, "grid has " + sz(points) + " points");
  const ScanResult r = conjecture_scan(grid, 4);
  c.expect(r.violations.empty(), sz(r.violations.size()) + " violations");
  for (const auto& row : r.rows) c.expect(row.slack >= 0, "negative slack at a = " + to_string(row.a));
  const std::vector<std::tuple<Rational, Rational, unsigned, std::size_t>> anchored{
      {-1, 1, 1, 3}, {-1, 1, 2, 6}, {-1, 1, 3, 9}, {-1, Q(1, 2), 2, 8}, {-1, 3, 2, 6}};
  for (const auto& [a, b, k, want] : anchored) {
    bool found = false;
    for (const auto& row : r.rows) {
      if (row.a == a && row.b == b && row.k == k) {
        found = true;
        c.expect(row.deg_plus == want, "row (" + to_string(a) + ", " + to_string(b) + ", " + std::to_string(k) +
                                           ") has deg+ " + sz(row.deg_plus));
      }
    }
    c.expect(found, "anchored row missing");
  }
  c.notes << (c.ok ? "" : "; ") << points << " points, " << r.rows.size() << " rows, " << r.violations.size()
          << " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"quadratic golden values", criterion1},
      {"square of x^2 - x + 3 with Farkas certificate", criterion2},
      {"shifted cubic (x + 1/2)(x^2 - 3/2 x + 1)", criterion3},
      {"powers of x^2 - x + 1", criterion4},
      {"series and property (*) for (x^2 - x + 1/2)^2", criterion5},
      {"quadratic closed form vs LP", criterion6},
      {"cubic closed form vs LP", criterion7},
      {"sandwich bounds", criterion8},
      {"discriminant bounds on x^2 - x + 3", criterion9},
      {"cone generators", criterion10},
      {"Polya exponent", criterion11},
      {"conjecture scan", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    const std::string notes = c.notes.str();
    if (!notes.empty()) std::cout << " (" << notes << ")";
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << " s]\n";
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

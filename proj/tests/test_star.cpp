#include <doctest.h>

#include <sstream>

#include "degplus/error.hpp"
#include "degplus/sampling.hpp"
#include "degplus/star.hpp"

using namespace degplus;

TEST_CASE("D of simple inputs") {
  CHECK(*capital_D(Polynomial({3, -1, 1})) == 1);
  CHECK(*capital_D(Polynomial({1, 2, 1})) == 0);
  CHECK_FALSE(capital_D(Polynomial({2, -3, 1})).has_value());
}

TEST_CASE("irreducible quadratics pass the truncation check") {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const Polynomial q = random_quadratic(rng, 10);
    const TruncationCheck c = truncation_check(q);
    CHECK(c.nonneg);
    CHECK(c.product.has_nonnegative_coeffs());
  }
}

TEST_CASE("property (*) for a square") {
  const Polynomial q({Rational(1, 2), -1, 1});
  const StarReport r = property_star(q * q, {q, q});
  CHECK(r.verdict);
  CHECK(r.additivity_holds);
  CHECK_FALSE(truncation_check(q * q).nonneg);
  CHECK_THROWS_AS(property_star(q * q, {q}), Error);
}

TEST_CASE("verdict does not depend on factor order") {
  const Polynomial a({Rational(1, 2), 1});
  const Polynomial b({1, Rational(-3, 2), 1});
  const Polynomial p = a * b;
  CHECK(property_star(p, {a, b}).verdict == property_star(p, {b, a}).verdict);
  CHECK_FALSE(property_star(p, {a, b}).verdict);
  const Polynomial q({3, -1, 1});
  const Polynomial r({Rational(1, 2), -1, 1});
  CHECK(property_star(q * r, {q, r}).verdict == property_star(q * r, {r, q}).verdict);
}

TEST_CASE("auto mode finds the split for a square") {
  const Polynomial q({Rational(1, 2), -1, 1});
  const StarSearch s = property_star_auto(q * q);
  CHECK(s.established);
  CHECK_FALSE(s.attempts.empty());
}

TEST_CASE("scan grid and rows") {
  const ScanGrid grid{-1, -1, 1, 3, 1, 2};
  CHECK(grid_points(grid).size() == 3);
  std::vector<ScanRow> streamed;
  const ScanResult r = conjecture_scan(grid, 2, [&](const ScanRow& row) { streamed.push_back(row); });
  CHECK(r.rows.size() == 6);
  CHECK(r.violations.empty());
  REQUIRE(streamed.size() == r.rows.size());
  for (std::size_t i = 0; i < streamed.size(); ++i) CHECK(csv_row(streamed[i], false) == csv_row(r.rows[i], false));
  CHECK(csv_header(false) == "a,b,k,deg_plus,bound,slack");
  CHECK_THROWS_AS(conjecture_scan(ScanGrid{-1, -2, 1, 3, 1, 1}), Error);
}

TEST_CASE("scan output does not depend on the worker count") {
  const ScanGrid grid{-2, -1, 1, 2, 2, 2};
  std::string one, four;
  for (auto& [jobs, text] : {std::pair<unsigned, std::string*>{1, &one}, {4, &four}}) {
    std::ostringstream out;
    conjecture_scan(grid, jobs, [&](const ScanRow& row) { out << csv_row(row, false) << "\n"; });
    *text = out.str();
  }
  CHECK(one == four);
  CHECK_FALSE(one.empty());
}

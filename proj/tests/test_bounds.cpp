#include <doctest.h>

#include <random>

#include "degplus/bounds.hpp"
#include "degplus/error.hpp"
#include "degplus/sampling.hpp"
#include "degplus/search.hpp"

using namespace degplus;

TEST_CASE("report on x^2 - x + 3") {
  const BoundsReport r = report(Polynomial({3, -1, 1}));
  CHECK(*r.n_up.value == 3);
  CHECK(*r.n_down.value == 3);
  CHECK(*r.lower_angle_power.value == 3);
  CHECK(*r.upper_structural.value == 3);
  CHECK(*r.upper_turan.value == 3);
  CHECK(*r.upper_estim_M.value == 16);
  CHECK(*r.upper_estim_L.value == 18);
  CHECK(*r.upper_zaimi.value == 63);
  CHECK(*r.exact_closed_form.value == 3);
  CHECK(*r.best_lower() == 3);
  CHECK(*r.best_upper() == 3);
}

TEST_CASE("report rejects positive roots and short-circuits nonnegative input") {
  CHECK_THROWS_AS(report(Polynomial({2, -3, 1})), Error);
  const BoundsReport r = report(Polynomial({0, 1, 2, 1}));
  CHECK(*r.exact_closed_form.value == 3);
  CHECK(r.stripped_x_power == 1);
  CHECK_FALSE(r.upper_turan.value.has_value());
}

TEST_CASE("sandwich on random quadratics and their powers") {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const Polynomial q = random_quadratic(rng, 12);
    for (unsigned k = 1; k <= 2; ++k) {
      const Polynomial p = pow(q, k);
      const std::size_t exact = deg_plus_finite(p).deg_plus;
      CHECK(lower_recurrence_up(p) <= exact);
      CHECK(lower_recurrence_down(p) <= exact);
      CHECK(exact <= upper_structural(p));
      const auto [lo, hi] = power_bounds(q, k);
      CHECK(lo <= exact);
      CHECK(exact <= hi);
    }
  }
}

TEST_CASE("bounds are invariant under positive scaling and reversal") {
  Rng rng(32);
  for (int t = 0; t < 15; ++t) {
    const Polynomial p = random_cubic(rng, 10);
    const Rational s(7, 3);
    const Polynomial scaled = scale(p, s) * Rational(5, 2);
    CHECK(lower_recurrence_up(p) == lower_recurrence_up(scaled));
    CHECK(lower_recurrence_down(p) == lower_recurrence_down(scaled));
    CHECK(lower_recurrence_up(p) == lower_recurrence_down(reverse(p)));
    CHECK(upper_structural(p) == upper_structural(reverse(p)));
    CHECK(exact_cubic(p).value == exact_cubic(scaled).value);
  }
}

TEST_CASE("recurrence on nonnegative input stops at the degree") {
  const Polynomial p({1, 0, 2, 1});
  CHECK(lower_recurrence_up(p) == 3);
  CHECK(lower_recurrence_down(p) == 3);
}

TEST_CASE("recurrence cap") {
  // phi just above 0, so the recurrence runs long
  const Polynomial p({1, Rational(-199, 100), 1});
  CHECK_THROWS_AS(lower_recurrence_up(p, 5), Error);
  CHECK(lower_recurrence_up(p) == deg_plus_finite(p).deg_plus);
}

TEST_CASE("quadratic closed form and strict witness one degree up") {
  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const Polynomial q = random_quadratic(rng, 15);
    const QuadraticResult r = exact_quadratic(q);
    CHECK(r.value == deg_plus_finite(q).deg_plus);
    CHECK(std::holds_alternative<Witness>(strict_witness(q, r.value + 1)));
  }
  CHECK_THROWS_AS(exact_quadratic(Polynomial({1, 1, 1})), Error);
  CHECK_THROWS_AS(exact_quadratic(Polynomial({1, -1, 0, 1})), Error);
}

TEST_CASE("cubic closed form on the shifted example") {
  const Polynomial p = Polynomial({Rational(1, 2), 1}) * Polynomial({1, Rational(-3, 2), 1});
  const CubicResult r = exact_cubic(p);
  CHECK(r.value == 5);
  CHECK(r.n_up == 5);
  CHECK(r.consistent);
}

TEST_CASE("Turan bound") {
  CHECK_THROWS_AS(upper_turan(Polynomial({1, 1, 1})), Error);
  CHECK(upper_turan(Polynomial({Rational(1, 2), -1, 1})) == 5);
}

TEST_CASE("estimates need squarefree input") {
  const Polynomial q({3, -1, 1});
  CHECK_THROWS_AS(upper_estim(q * q, EstimKind::Mahler), Error);
  CHECK(upper_estim(q, EstimKind::Mahler) == 16);
  CHECK(upper_zaimi(q) == 63);
  CHECK(upper_estim(q * Polynomial({1, -1, 2}), EstimKind::Mahler) >= deg_plus_finite(q * Polynomial({1, -1, 2})).deg_plus);
}

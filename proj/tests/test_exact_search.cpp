#include <doctest.h>

#include "degplus/error.hpp"
#include "degplus/sampling.hpp"
#include "degplus/search.hpp"

using namespace degplus;

namespace {

void check_certificate(const Polynomial& p) {
  const DegPlusCertificate c = deg_plus_finite(p);
  const auto split = strip_x_power(p);
  CHECK(c.product == c.witness * p);
  CHECK(c.product.has_nonnegative_coeffs());
  CHECK(c.product.degree() == c.deg_plus);
  CHECK(c.D == c.deg_plus - p.degree());
  if (c.deg_plus > p.degree()) {
    REQUIRE(c.farkas_below.has_value());
    CHECK(verify_farkas(p, c.deg_plus - 1, *c.farkas_below));
    CHECK(std::holds_alternative<Infeasible>(feasible_at(split.rest, c.deg_plus - 1 - split.power)));
  }
}

}  // namespace

TEST_CASE("known values with certificates") {
  const DegPlusCertificate c = deg_plus_finite(Polynomial({3, -1, 1}));
  CHECK(c.deg_plus == 3);
  CHECK(c.witness == Polynomial({1, 1}));
  CHECK(c.product == Polynomial({3, 2, 0, 1}));
  CHECK(deg_plus_finite(Polynomial({1, -1, 1})).product == Polynomial({1, 0, 0, 1}));
  CHECK(deg_plus_finite(Polynomial({Rational(1, 2), -1, 1})).deg_plus == 4);
  for (const auto& p : {Polynomial({3, -1, 1}), Polynomial({1, -1, 1}), Polynomial({Rational(1, 2), -1, 1}),
                        pow(Polynomial({1, -1, 1}), 2)}) {
    check_certificate(p);
  }
}

TEST_CASE("certificates on random cubics and quadratic squares") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) check_certificate(random_cubic(rng, 10));
  for (int t = 0; t < 10; ++t) check_certificate(pow(random_quadratic(rng, 8), 2));
}

TEST_CASE("multiplying by x shifts deg+ by one") {
  Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    const Polynomial p = random_cubic(rng, 10);
    const auto base = deg_plus_finite(p);
    const auto shifted = deg_plus_finite(Polynomial::monomial(1, 1) * p);
    CHECK(shifted.deg_plus == base.deg_plus + 1);
    CHECK(shifted.D == base.D);
    CHECK(shifted.stripped_x_power == 1);
  }
}

TEST_CASE("positive real root gives infinity with an isolating interval") {
  const DegPlusResult r = deg_plus(Polynomial({2, -3, 1}));
  REQUIRE(std::holds_alternative<InfiniteDegPlus>(r));
  const auto& iv = std::get<InfiniteDegPlus>(r).root_interval;
  CHECK(iv.first < 1);
  CHECK(1 <= iv.second);
  CHECK_THROWS_AS(deg_plus_finite(Polynomial({2, -3, 1})), Error);
}

TEST_CASE("nonnegative input and constants") {
  CHECK(deg_plus_finite(Polynomial({1, 2, 1})).deg_plus == 2);
  CHECK(deg_plus_finite(Polynomial({5})).deg_plus == 0);
  const auto neg = deg_plus_finite(Polynomial({-3, 1, -1}));
  CHECK(neg.deg_plus == 3);
  CHECK(neg.product.has_nonnegative_coeffs());
  CHECK_THROWS_AS(deg_plus(Polynomial{}), Error);
}

TEST_CASE("feasibility preconditions") {
  CHECK_THROWS_AS(feasible_at(Polynomial({0, 1, 1}), 3), Error);
  CHECK_THROWS_AS(feasible_at(Polynomial({3, -1, 1}), 1), Error);
  CHECK_THROWS_AS(feasible_at(Polynomial({2, -3, 1}), 4), Error);
}

TEST_CASE("Polya exponent dominates deg+ - deg") {
  Rng rng(43);
  for (int t = 0; t < 15; ++t) {
    const Polynomial p = random_quadratic(rng, 10);
    const PolyaResult r = polya_exponent(p);
    CHECK(r.product.has_nonnegative_coeffs());
    CHECK(r.product == pow(Polynomial({1, 1}), static_cast<unsigned>(r.k)) * p);
    CHECK(r.product.degree() >= deg_plus_finite(p).deg_plus);
    if (r.k > 0) CHECK_FALSE((pow(Polynomial({1, 1}), static_cast<unsigned>(r.k - 1)) * p).has_nonnegative_coeffs());
  }
  CHECK_THROWS_AS(polya_exponent(Polynomial({1, Rational(-199, 100), 1}), 3), Error);
}

TEST_CASE("strict witness") {
  CHECK(std::holds_alternative<Witness>(strict_witness(Polynomial({Rational(1, 2), -1, 1}), 5)));
  CHECK(std::holds_alternative<Infeasible>(strict_witness(Polynomial({1, -1, 1}), 3)));
}

TEST_CASE("search is deterministic") {
  const Polynomial p = Polynomial({Rational(2, 3), 1}) * Polynomial({Rational(5, 7), Rational(-6, 5), 1});
  const auto a = deg_plus_finite(p);
  const auto b = deg_plus_finite(p);
  CHECK(a.witness == b.witness);
  CHECK(a.farkas_below == b.farkas_below);
}

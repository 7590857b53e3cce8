#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "degplus/error.hpp"
#include "degplus/roots.hpp"

using namespace degplus;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p *= Polynomial({-r, 1});
  return p;
}

}  // namespace

TEST_CASE("Sturm count matches planted roots") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> count(1, 5);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> roots;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.push_back(r);
    }
    std::vector<Rational> distinct_pos;
    for (const auto& r : roots) {
      if (r > 0 && std::find(distinct_pos.begin(), distinct_pos.end(), r) == distinct_pos.end()) {
        distinct_pos.push_back(r);
      }
    }
    // An irreducible factor adds no real roots.
    const Polynomial p = from_roots(roots) * Polynomial({1, 1, 1});
    CHECK(count_positive_roots(p) == distinct_pos.size());
    const auto iv = isolate_positive_root(p);
    CHECK(iv.has_value() == !distinct_pos.empty());
    if (iv) {
      const Rational smallest = *std::min_element(distinct_pos.begin(), distinct_pos.end());
      CHECK(iv->first < smallest);
      CHECK(smallest <= iv->second);
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(Polynomial({2, -3, 1})) == PositivityClass::HasPositiveRealRoot);
  CHECK(classify(Polynomial({1, 2, 1})) == PositivityClass::NonNegCoefficients);
  CHECK(classify(Polynomial({3, -1, 1})) == PositivityClass::PositiveOnPositiveAxis);
  CHECK(classify(Polynomial({-3, 1, -1})) == PositivityClass::PositiveOnPositiveAxis);
  CHECK(classify(Polynomial({1, -2, 1})) == PositivityClass::HasPositiveRealRoot);
  CHECK(classify(Polynomial({0, 3, -1, 1})) == PositivityClass::PositiveOnPositiveAxis);
  CHECK(to_string(PositivityClass::NonNegCoefficients) == "NonNegCoefficients");
}

TEST_CASE("least argument of a quadratic is arccos(-a / (2 sqrt b))") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 10);
  for (int t = 0; t < 40; ++t) {
    Rational a(-num(rng), den(rng));
    a.canonicalize();
    Rational b = a * a / 4 + Rational(num(rng), den(rng));
    const Interval phi = least_positive_argument(Polynomial({b, a, 1}));
    const double expected = std::acos(-a.get_d() / (2 * std::sqrt(b.get_d())));
    CHECK(phi.lo_double() <= expected + 1e-12);
    CHECK(expected - 1e-12 <= phi.hi_double());
    CHECK(phi.width().to_double() < 1e-20);
  }
}

TEST_CASE("certified roots of x^5 + 1 and a repeated factor") {
  const auto roots = compute_roots(Polynomial({1, 0, 0, 0, 0, 1}), 1e-30);
  REQUIRE(roots.size() == 5);
  int real = 0;
  for (const auto& r : roots) {
    CHECK(std::abs(std::abs(r.approx()) - 1.0) < 1e-25);
    real += r.is_real;
  }
  CHECK(real == 1);
  const Polynomial q({3, -1, 1});
  const auto rep = compute_roots(q * q * Polynomial({2, 1}), 1e-20);
  REQUIRE(rep.size() == 3);
  for (const auto& r : rep) CHECK(r.multiplicity == (r.is_real ? 1u : 2u));
}

TEST_CASE("argument of a negative real root is pi") {
  const Interval phi = least_positive_argument(Polynomial({2, 1}) * Polynomial({3, 1}));
  CHECK(phi.lo_double() <= std::numbers::pi);
  CHECK(std::numbers::pi <= phi.hi_double() + 1e-15);
}

TEST_CASE("Mahler measure is multiplicative") {
  const Polynomial p({3, -1, 1});
  const Polynomial q({Rational(1, 2), -1, 1});
  const Interval mp = mahler_measure(p);
  const Interval mq = mahler_measure(q);
  const Interval mpq = mahler_measure(p * q);
  CHECK(mp.contains(3));
  CHECK(mq.contains(1));
  CHECK((mp * mq).overlaps(mpq));
  CHECK(std::abs(mpq.mid_double() - 3.0) < 1e-25);
}

TEST_CASE("Dubickas T of x^2 - x + 3 is sqrt 3") {
  const Interval t = dubickas_T(Polynomial({3, -1, 1}));
  CHECK(std::abs(t.mid_double() - std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("magnitude bounds enclose every root") {
  const Polynomial p({3, -1, 1});
  CHECK(magnitude_bound(p, MagnitudeBoundKind::EuclideanNorm) == Rational(10, 3));
  const Polynomial c({Rational(3, 8), 0, Rational(-5, 4), 1});
  for (auto kind : {MagnitudeBoundKind::CauchyPlusOne, MagnitudeBoundKind::EuclideanNorm}) {
    const double bound = magnitude_bound(c, kind).get_d();
    for (const auto& r : compute_roots(c, 1e-10)) CHECK(std::abs(r.approx()) <= bound);
  }
}

TEST_CASE("rational quadratic factor reconstruction") {
  const Polynomial q({Rational(7, 3), Rational(-5, 4), 1});
  for (const auto& r : compute_roots(q * Polynomial({1, 1}), 1e-30)) {
    if (r.is_real) continue;
    const auto f = rational_quadratic_factor(r);
    REQUIRE(f.has_value());
    CHECK(*f == q);
  }
}

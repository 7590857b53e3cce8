#include <doctest.h>

#include <random>

#include "degplus/error.hpp"
#include "degplus/polynomial.hpp"

using namespace degplus;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return Polynomial(c);
}

}  // namespace

TEST_CASE("parse and print") {
  const Polynomial p = parse_polynomial("3,-1,1");
  CHECK(p == Polynomial({3, -1, 1}));
  CHECK(to_string(p) == "3,-1,1");
  CHECK(to_pretty_string(p) == "x^2 - x + 3");
  CHECK(parse_polynomial(" 1/2 , -3/2,1") == Polynomial({Rational(1, 2), Rational(-3, 2), 1}));
  CHECK(parse_polynomial("0,0,0").is_zero());
  CHECK(parse_polynomial("2,4/2,0") == Polynomial({2, 2}));
}

TEST_CASE("decimal and malformed input are rejected") {
  for (const char* bad : {"0.5,1", "1e3", "1,,2", "x", "1/0", ""}) {
    CHECK_THROWS_AS(parse_polynomial(bad), Error);
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = random_poly(rng, 5);
    const Polynomial q = random_poly(rng, 5);
    const Polynomial r = random_poly(rng, 4);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q - q == p);
    CHECK(pow(p, 3) == p * p * p);
    if (!q.is_zero()) {
      const DivMod dm = divmod(p, q);
      CHECK(dm.quotient * q + dm.remainder == p);
      CHECK((dm.remainder.is_zero() || dm.remainder.degree() < q.degree()));
    }
  }
}

TEST_CASE("reverse is multiplicative when constant terms are nonzero") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = random_poly(rng, 5);
    const Polynomial q = random_poly(rng, 5);
    if (p.is_zero() || q.is_zero() || p[0] == 0 || q[0] == 0) continue;
    CHECK(reverse(p * q) == reverse(p) * reverse(q));
    CHECK(reverse(reverse(p)) == p);
  }
}

TEST_CASE("truncated inverse satisfies p * (1/p)_n = 1 mod x^(n+1)") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = random_poly(rng, 4);
    if (p.is_zero() || p[0] == 0) continue;
    for (std::size_t n : {0, 1, 4, 7}) {
      const Polynomial prod = p * truncated_inverse(p, n).as_polynomial();
      CHECK(prod[0] == 1);
      for (std::size_t j = 1; j <= n; ++j) CHECK(prod[j] == 0);
    }
  }
  CHECK_THROWS_AS(truncated_inverse(Polynomial({0, 1}), 3), Error);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(Polynomial({3, -1, 1})) == -11);
  CHECK(discriminant(Polynomial({Rational(1, 2), -1, 1})) == -1);
  const Polynomial q({5, 2, -3, 1});
  CHECK(discriminant(q * q) == 0);
  // b^2 - 4ac for a generic quadratic
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = random_poly(rng, 2);
    if (p.is_zero() || p.degree() != 2) continue;
    CHECK(discriminant(p) == p[1] * p[1] - 4 * p[2] * p[0]);
  }
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
  const Polynomial a({1, -1, 1});
  const Polynomial b({Rational(1, 2), 1});
  const auto parts = squarefree_decomposition(pow(a, 3) * b);
  Polynomial rebuilt = Polynomial::constant(1);
  for (const auto& f : parts) rebuilt *= pow(f.factor, f.multiplicity);
  CHECK(monic(rebuilt) == monic(pow(a, 3) * b));
  CHECK(is_squarefree(a * b));
  CHECK_FALSE(is_squarefree(a * a));
}

TEST_CASE("x-power stripping and scaling") {
  const auto split = strip_x_power(Polynomial({0, 0, 3, -1, 1}));
  CHECK(split.power == 2);
  CHECK(split.rest == Polynomial({3, -1, 1}));
  CHECK(scale(Polynomial({3, -1, 1}), 2) == Polynomial({3, -2, 4}));
  CHECK(primitive_integer(Polynomial({Rational(1, 2), Rational(-3, 4), 1})) == Polynomial({2, -3, 4}));
}

#include <doctest.h>

#include "degplus/cone.hpp"
#include "degplus/error.hpp"
#include "degplus/sampling.hpp"
#include "degplus/search.hpp"

using namespace degplus;

TEST_CASE("generators for x^2 - x + 1") {
  const Polynomial p({1, -1, 1});
  CHECK(cone_generators(p, 0).rays.empty());
  const auto one = cone_generators(p, 1).rays;
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Polynomial({1, 0, 0, 1}));
  const auto two = cone_generators(p, 2).rays;
  CHECK(two.size() == 3);
  CHECK(rays_are_extremal(two));
  const auto least = least_generating_set(p, 4);
  CHECK(least == std::vector<Polynomial>{Polynomial({1, 0, 0, 1}), Polynomial({1, 0, 1, 0, 1})});
}

TEST_CASE("rays are divisible, nonnegative, and start at deg+") {
  Rng rng(51);
  for (int t = 0; t < 6; ++t) {
    const Polynomial p = t % 2 == 0 ? random_quadratic(rng, 6) : random_cubic(rng, 6);
    const std::size_t dp = deg_plus_finite(p).deg_plus;
    const std::size_t n = dp - p.degree() + 1;
    const auto rays = cone_generators(p, n).rays;
    REQUIRE_FALSE(rays.empty());
    std::size_t min_degree = rays.front().degree();
    for (const auto& r : rays) {
      CHECK(r.has_nonnegative_coeffs());
      CHECK(divides(p, r));
      CHECK(r.degree() <= p.degree() + n);
      min_degree = std::min(min_degree, r.degree());
    }
    CHECK(min_degree == dp);
    CHECK(rays_are_extremal(rays));
  }
}

TEST_CASE("budget below the degree is rejected") {
  CHECK_THROWS_AS(least_generating_set(Polynomial({3, -1, 1}), 1), Error);
  CHECK(least_generating_set(Polynomial({0, 1}), 2) == std::vector<Polynomial>{Polynomial({0, 1})});
  CHECK(least_generating_set(Polynomial({1, 1, 1}), 3) == std::vector<Polynomial>{Polynomial({1, 1, 1})});
}

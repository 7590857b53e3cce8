#pragma once

#include <random>
#include <vector>

#include "degplus/polynomial.hpp"

namespace degplus {

using Rng = std::mt19937_64;

/// Rational with denominator in [1, den_bound] drawn from (lo, hi].
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned den_bound);

/// x^2 + a x + b with a < 0, a^2 < 4b, denominators <= den_bound.
Polynomial random_quadratic(Rng& rng, unsigned den_bound);

/// Monic cubic positive on (0, inf) with a negative coefficient: either
/// (x + c)(x^2 + a x + b) or an unstructured coefficient draw, by coin flip.
Polynomial random_cubic(Rng& rng, unsigned den_bound);

/// (x + c)(x^2 - a x + 1) with a = k/20 and c placed at (or within 1% of) a
/// root of the sine criterion's equality case.
std::vector<Polynomial> near_criterion_cubics();

}  // namespace degplus

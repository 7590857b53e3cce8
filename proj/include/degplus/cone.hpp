#pragma once

#include <cstddef>
#include <vector>

#include "degplus/polynomial.hpp"

namespace degplus {

/// Extremal rays of M_n = {f = h p : deg h <= n, f coefficient-nonnegative},
/// as primitive integer polynomials sorted by ascending coefficient vector.
struct ConeGenerators {
  std::size_t n = 0;
  std::vector<Polynomial> rays;
};

/// Double description over Q.
ConeGenerators cone_generators(const Polynomial& p, std::size_t n);

/// Union of the X_n for deg(h) <= degree_budget - deg(p), minus every
/// element that is x^k times another element.
std::vector<Polynomial> least_generating_set(const Polynomial& p, std::size_t degree_budget);

/// No ray is a nonnegative combination of the others (exact LP per ray).
bool rays_are_extremal(const std::vector<Polynomial>& rays);

/// Ascending coefficient-vector order used for ray output.
bool ray_less(const Polynomial& a, const Polynomial& b);

}  // namespace degplus

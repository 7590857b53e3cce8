#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "degplus/matrix.hpp"
#include "degplus/polynomial.hpp"

namespace degplus {

struct Witness {
  Polynomial h;
};

/// y >= 0 with y^T A = 0 and y^T b < 0 for the system A h + b >= 0 of the
/// queried degree (rows indexed by the coefficient of x^j in h*p).
struct Infeasible {
  std::vector<Rational> farkas;
};

using FeasibilityOutcome = std::variant<Witness, Infeasible>;

/// The constraint system behind feasible_at: coefficients of h*p >= 0 for
/// monic h of degree m - deg(p), as A h' + b >= 0 over h' = (h_0..h_{m-d-1}).
struct ConstraintSystem {
  Matrix A;
  std::vector<Rational> b;
};

/// p is normalized to monic with positive leading coefficient first; p(0) != 0.
ConstraintSystem monic_system(const Polynomial& p, std::size_t m);
/// Coefficients of h*p >= 1 for h of degree <= m - deg(p), all entries free.
ConstraintSystem strict_system(const Polynomial& p, std::size_t m);

/// Is there a monic h with deg(h*p) = m and h*p coefficient-nonnegative?
/// The witness h refers to the monic normalization of p.
FeasibilityOutcome feasible_at(const Polynomial& p, std::size_t m);

/// Same question with every coefficient of h*p >= 1 (h of degree m - deg p,
/// not necessarily monic).
FeasibilityOutcome strict_witness(const Polynomial& p, std::size_t m);

/// Exact check of a Farkas vector against the system at degree m for p
/// (after the normalization feasible_at applies, including x-power stripping).
bool verify_farkas(const ConstraintSystem& system, const std::vector<Rational>& y);
bool verify_farkas(const Polynomial& p, std::size_t m, const std::vector<Rational>& y);

struct DegPlusCertificate {
  std::size_t deg_plus = 0;
  std::size_t D = 0;
  /// witness * p == product, for the p that was passed in.
  Polynomial witness;
  Polynomial product;
  /// Certificate at degree deg_plus - 1; absent when deg_plus == deg(p).
  std::optional<std::vector<Rational>> farkas_below;
  std::size_t stripped_x_power = 0;
  /// First degree the search tried (the recurrence lower bound).
  std::size_t search_start = 0;
};

/// p has a positive real root inside (lo, hi].
struct InfiniteDegPlus {
  std::pair<Rational, Rational> root_interval;
};

using DegPlusResult = std::variant<DegPlusCertificate, InfiniteDegPlus>;

DegPlusResult deg_plus(const Polynomial& p);

/// deg_plus, throwing InfiniteDegPlus when p has a positive root.
DegPlusCertificate deg_plus_finite(const Polynomial& p);

struct PolyaResult {
  std::size_t k = 0;
  Polynomial product;
};

/// Least k with (x+1)^k p coefficient-nonnegative.
PolyaResult polya_exponent(const Polynomial& p, std::size_t cap = 10000);

}  // namespace degplus

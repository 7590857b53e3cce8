#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "degplus/angle.hpp"
#include "degplus/roots.hpp"

namespace degplus {

/// n-up: first n >= d with r_n <= 0 for a_d r_{n+d} = -(a_{d-1} r_{n+d-1} +
/// ... + a_0 r_n), r_0 = ... = r_{d-2} = 0, r_{d-1} = 1. Throws CapExceeded
/// past `cap` (default: default_recurrence_cap).
std::size_t lower_recurrence_up(const Polynomial& p, std::optional<std::size_t> cap = std::nullopt);
/// n-up of the reversed polynomial.
std::size_t lower_recurrence_down(const Polynomial& p, std::optional<std::size_t> cap = std::nullopt);
/// upper_structural(p) + deg(p) when it can be computed, else 100000.
std::size_t default_recurrence_cap(const Polynomial& p, const PrecisionPolicy& policy = {});

struct QuadraticResult {
  std::size_t value = 0;
  /// The angle ceiling stayed ambiguous and the LP decided.
  bool lp_fallback = false;
};

/// ceil(pi / phi) for x^2 + a x + b with complex roots of argument phi < pi/2.
QuadraticResult exact_quadratic(const Polynomial& p, const PrecisionPolicy& policy = {});

/// c, r, phi of (x + c)(x - w)(x - conj w), w = r e^{i phi}, with the derived
/// n = ceil(pi/phi), eps = n phi - pi and s = min(c/r, r/c).
struct CubicGeometry {
  Interval c;
  Interval r;
  Interval phi;
  std::size_t n;
  Interval eps;
  Interval s;
};

struct CubicResult {
  std::size_t value = 0;
  std::size_t n_up = 0;
  std::size_t n_down = 0;
  /// Value predicted by the sine criterion, when p has the parametrized shape.
  std::optional<std::size_t> criterion_value;
  std::optional<CubicGeometry> geometry;
  /// The criterion straddled equality and the LP at degree n decided.
  bool criterion_lp_fallback = false;
  bool consistent = true;
};

CubicResult exact_cubic(const Polynomial& p, const PrecisionPolicy& policy = {});

/// (ceil(k pi / phi), k ceil(pi / phi)) for a quadratic with complex roots.
std::pair<std::size_t, std::size_t> power_bounds(const Polynomial& p, unsigned k, const PrecisionPolicy& policy = {});

/// floor(d/2) (ceil(pi / phi0) - 2) + d.
std::size_t upper_structural(const Polynomial& p, const PrecisionPolicy& policy = {});

/// ceil((d/2) (floor(pi / phi0) + 1)); AngleTooLarge when phi0 > pi/2.
std::size_t upper_turan(const Polynomial& p, const PrecisionPolicy& policy = {});

enum class EstimKind { Mahler, MagnitudePower };

/// floor(d/2) (ceil(pi / arcsin(sqrt(|disc| / d^(d+3)) / K^(d-1))) - 2) + d
/// with K = M or K = L^(d/2), L = min(Cauchy, Euclidean) magnitude bound.
std::size_t upper_estim(const Polynomial& p, EstimKind kind, const PrecisionPolicy& policy = {});

/// floor(2 d pi / arcsin(sqrt(|disc| / d^(d+3)) / M^(d-1))). The bound
/// assumes p irreducible over Q, which is not checked.
std::size_t upper_zaimi(const Polynomial& p, const PrecisionPolicy& policy = {});

/// Real value 2 d pi / arcsin(...) as an enclosure.
Interval zaimi_value(const Polynomial& p, Precision prec, const PrecisionPolicy& policy = {});

struct BoundEntry {
  std::optional<std::size_t> value;
  /// Which result the value comes from.
  std::string provenance;
  /// Why the value is missing.
  std::string reason;
  /// An angle ceiling stayed ambiguous at the precision ceiling and the
  /// safe side was taken.
  bool conservative = false;
};

struct BoundsReport {
  PositivityClass positivity = PositivityClass::PositiveOnPositiveAxis;
  std::size_t degree = 0;
  std::size_t stripped_x_power = 0;
  BoundEntry n_up;
  BoundEntry n_down;
  BoundEntry lower_angle_power;
  BoundEntry upper_structural;
  BoundEntry upper_turan;
  BoundEntry upper_estim_M;
  BoundEntry upper_estim_L;
  BoundEntry upper_zaimi;
  bool zaimi_irreducibility_verified = false;
  BoundEntry exact_closed_form;

  std::optional<std::size_t> best_lower() const;
  std::optional<std::size_t> best_upper() const;
};

/// Every applicable bound for p; x-powers are stripped and added back.
/// Throws PositiveRootPresent when deg+ is infinite.
BoundsReport report(const Polynomial& p, const PrecisionPolicy& policy = {});

}  // namespace degplus

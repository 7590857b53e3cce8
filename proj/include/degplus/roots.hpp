#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "degplus/interval.hpp"
#include "degplus/polynomial.hpp"

namespace degplus {

// ---------------------------------------------------------------------------
// Exact positivity classification.

enum class PositivityClass { HasPositiveRealRoot, NonNegCoefficients, PositiveOnPositiveAxis };

std::string_view to_string(PositivityClass c);

/// Negates p when its leading coefficient is negative.
Polynomial sign_normalize(const Polynomial& p);

/// Number of distinct real roots in (0, inf), by a Sturm sequence over Q.
std::size_t count_positive_roots(const Polynomial& p);

/// A rational interval (lo, hi] holding exactly one positive root (the
/// smallest one), or nullopt when p has none.
std::optional<std::pair<Rational, Rational>> isolate_positive_root(const Polynomial& p);

/// Sign-normalizes p first; NonNegCoefficients is reported in preference to
/// PositiveOnPositiveAxis when both hold.
PositivityClass classify(const Polynomial& p);

// ---------------------------------------------------------------------------
// Certified complex roots.

struct PrecisionPolicy {
  Precision start_bits = 128;
  Precision ceiling_bits = 8192;
};

/// A disk certified to contain exactly one distinct root of p. Disks of
/// distinct roots are pairwise disjoint.
struct RootEnclosure {
  BigFloat center_re;
  BigFloat center_im;
  BigFloat radius;
  unsigned multiplicity = 1;
  /// The root is certified real (it is its own conjugate).
  bool is_real = false;
  /// Monic squarefree rational factor of p that vanishes at this root.
  Polynomial factor;

  std::complex<double> approx() const { return {center_re.to_double(), center_im.to_double()}; }
  Interval modulus() const;
  /// Enclosure of |arg(root)| in [0, pi].
  Interval abs_argument() const;
};

/// Roots of p (deg >= 1) with radius <= target_radius. Starts at the policy's
/// start precision and doubles until the disks certify; throws
/// PrecisionExhausted past the ceiling.
std::vector<RootEnclosure> compute_roots(const Polynomial& p, double target_radius,
                                         const PrecisionPolicy& policy = {});

/// Certified roots at working precision `prec` or above (escalating only if
/// certification fails at `prec`).
std::vector<RootEnclosure> certified_roots(const Polynomial& p, Precision prec,
                                           const PrecisionPolicy& policy = {});

/// The exact rational monic quadratic factor of p containing this nonreal
/// root, when one exists and can be reconstructed from the enclosure.
std::optional<Polynomial> rational_quadratic_factor(const RootEnclosure& root);

enum class MagnitudeBoundKind { CauchyPlusOne, EuclideanNorm };

/// Certified upper bound on the root moduli of a monic p.
Rational magnitude_bound(const Polynomial& p, MagnitudeBoundKind kind);

/// Least |arg| over the nonzero roots of p. Requires p in D+.
Interval least_positive_argument(const Polynomial& p, Precision prec = 128, const PrecisionPolicy& policy = {});
/// prod max{1, |root|} for monic(p).
Interval mahler_measure(const Polynomial& p, Precision prec = 128, const PrecisionPolicy& policy = {});
/// |a1|^{d-1} |a2|^{d-2} ... |a_{d-1}| over roots sorted by decreasing modulus.
Interval dubickas_T(const Polynomial& p, Precision prec = 128, const PrecisionPolicy& policy = {});

struct RootData {
  std::vector<RootEnclosure> roots;
  Interval phi0;
  Interval mahler;
  Rational magnitude_bound_L;
  Interval dubickas_T;
  Rational discriminant;
};

/// All root-derived quantities of monic(p) at one working precision. p must
/// have degree >= 2 and p(0) != 0.
RootData analyze_roots(const Polynomial& p, Precision prec = 128, const PrecisionPolicy& policy = {});

// Helpers on enclosure lists, shared with the bounds module.
Interval least_argument_of(const std::vector<RootEnclosure>& roots);
Interval mahler_of(const std::vector<RootEnclosure>& roots);
Interval dubickas_of(const std::vector<RootEnclosure>& roots);

}  // namespace degplus

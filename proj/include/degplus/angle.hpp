#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "degplus/roots.hpp"

namespace degplus {

/// An integer obtained by rounding a certified real enclosure. `exact` is
/// false when the enclosure still straddled a candidate at the precision
/// ceiling and the caller's conservative side was taken instead.
struct CertifiedInteger {
  Integer value;
  bool exact = true;
};

enum class Conservative { Low, High };

/// ceil(v) where eval(prec) encloses v. `at_most(m)` may decide v <= m
/// exactly (nullopt when it cannot).
CertifiedInteger certified_ceil(const std::function<Interval(Precision)>& eval,
                                const std::function<std::optional<bool>(const Integer&)>& at_most,
                                const PrecisionPolicy& policy, Conservative side);
/// floor(v); `at_least(m)` may decide v >= m exactly.
CertifiedInteger certified_floor(const std::function<Interval(Precision)>& eval,
                                 const std::function<std::optional<bool>(const Integer&)>& at_least,
                                 const PrecisionPolicy& policy, Conservative side);

/// Certified comparisons of the least nonzero root argument phi0 of a
/// polynomial (no positive roots, p(0) != 0) against rational multiples of pi.
/// Root enclosures are refined on demand.
class AngleOracle {
 public:
  explicit AngleOracle(const Polynomial& p, const PrecisionPolicy& policy = {});

  const Polynomial& polynomial() const { return p_; }
  const std::vector<RootEnclosure>& roots() const { return roots_; }
  Precision precision() const { return prec_; }
  /// Enclosure of phi0 at the current precision.
  Interval phi0() const;
  Interval phi0(Precision prec);
  /// Doubles the working precision; false at the ceiling.
  bool refine();

  /// Sign of phi0 - k pi / m (m > 0), or nullopt if undecided at the current
  /// precision.
  std::optional<int> compare(const Integer& k, const Integer& m) const;

  /// ceil(k pi / phi0) and floor(k pi / phi0).
  CertifiedInteger ceil_ratio(unsigned long k, Conservative side = Conservative::High);
  CertifiedInteger floor_ratio(unsigned long k, Conservative side = Conservative::High);

 private:
  void load(Precision prec);

  Polynomial p_;
  PrecisionPolicy policy_;
  Precision prec_;
  std::vector<RootEnclosure> roots_;
  std::vector<std::optional<Polynomial>> quadratics_;
};

/// Is the argument of the upper root of the rational quadratic x^2 + a x + b
/// (a^2 < 4b), known to lie in `arg`, exactly k pi / m? nullopt when `arg`
/// is too wide to single out k pi / m among the angles sharing its cosine
/// multiple.
std::optional<bool> quadratic_argument_equals(const Polynomial& quadratic, const Integer& k, const Integer& m,
                                              const Interval& arg);

}  // namespace degplus

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "degplus/rational.hpp"

namespace degplus {

using Precision = mpfr_prec_t;

/// Owning wrapper around an MPFR number.
class BigFloat {
 public:
  explicit BigFloat(Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact value (finite numbers only).
  Rational to_rational() const;

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward rounded endpoints. Every operation
/// returns an enclosure of the exact result set.
class Interval {
 public:
  explicit Interval(Precision prec);
  Interval(const BigFloat& lo, const BigFloat& hi);

  static Interval point(const BigFloat& value);
  static Interval from_rational(const Rational& q, Precision prec);
  static Interval from_integer(long v, Precision prec);
  static Interval pi(Precision prec);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  BigFloat& lo() noexcept { return lo_; }
  BigFloat& hi() noexcept { return hi_; }
  Precision precision() const noexcept { return lo_.precision(); }

  double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_double() const;
  /// Upper bound on hi - lo.
  BigFloat width() const;

  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_less(const Interval& other) const { return mpfr_less_p(hi_.get(), other.lo_.get()); }
  bool certainly_less_equal(const Interval& other) const {
    return mpfr_lessequal_p(hi_.get(), other.lo_.get());
  }
  bool contains(const Rational& q) const;
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool overlaps(const Interval& other) const;

  /// Exact ceil / floor of both endpoints.
  Integer ceil_lo() const;
  Integer ceil_hi() const;
  Integer floor_lo() const;
  Integer floor_hi() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval sqr(const Interval& a);
/// Requires a.lo >= 0 (negative parts are clipped to zero).
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval pow(const Interval& a, unsigned k);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
/// Arguments are clipped to [-1, 1].
Interval acos(const Interval& a);
Interval asin(const Interval& a);
/// Exact on subsets of [-pi/2, pi/2]; falls back to [-1, 1] elsewhere.
Interval sin(const Interval& a);

/// "[lo, hi]" in decimal with outward rounding.
std::string to_string(const Interval& a, int digits = 17);

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(Precision prec) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
/// Enclosure of |z|.
Interval abs(const ComplexInterval& z);

}  // namespace degplus

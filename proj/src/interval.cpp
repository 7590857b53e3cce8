#include "degplus/interval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace degplus {

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

namespace {

Precision joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Interval::Interval(Precision prec) : lo_(prec), hi_(prec) {}

Interval::Interval(const BigFloat& lo, const BigFloat& hi) : lo_(lo), hi_(hi) {
  if (mpfr_greater_p(lo_.get(), hi_.get())) std::swap(lo_, hi_);
}

Interval Interval::point(const BigFloat& value) { return Interval(value, value); }

Interval Interval::from_rational(const Rational& q, Precision prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_integer(long v, Precision prec) {
  Interval out(prec);
  mpfr_set_si(out.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(out.hi_.get(), v, MPFR_RNDU);
  return out;
}

Interval Interval::pi(Precision prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

double Interval::mid_double() const { return 0.5 * (lo_double() + hi_double()); }

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) && mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

namespace {

Integer rounded(const BigFloat& v, mpfr_rnd_t mode) {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), v.get(), mode);
  return out;
}

}  // namespace

Integer Interval::ceil_lo() const { return rounded(lo_, MPFR_RNDU); }
Integer Interval::ceil_hi() const { return rounded(hi_, MPFR_RNDU); }
Integer Interval::floor_lo() const { return rounded(lo_, MPFR_RNDD); }
Integer Interval::floor_hi() const { return rounded(hi_, MPFR_RNDD); }

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Interval out(prec);
  BigFloat t(prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs{{
      {a.lo_.get(), b.lo_.get()},
      {a.lo_.get(), b.hi_.get()},
      {a.hi_.get(), b.lo_.get()},
      {a.hi_.get(), b.hi_.get()},
  }};
  mpfr_set_inf(out.lo_.get(), 1);
  mpfr_set_inf(out.hi_.get(), -1);
  for (const auto& [x, y] : pairs) {
    mpfr_mul(t.get(), x, y, MPFR_RNDD);
    mpfr_min(out.lo_.get(), out.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), x, y, MPFR_RNDU);
    mpfr_max(out.hi_.get(), out.hi_.get(), t.get(), MPFR_RNDU);
  }
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  const Precision prec = joint(a, b);
  Interval recip(prec);
  mpfr_ui_div(recip.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(recip.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * recip;
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  Interval out(a.precision());
  mpfr_sqr(out.lo().get(), m.lo().get(), MPFR_RNDD);
  mpfr_sqr(out.hi().get(), m.hi().get(), MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& a) {
  Interval out(a.precision());
  if (mpfr_sgn(a.lo().get()) > 0) {
    mpfr_sqrt(out.lo().get(), a.lo().get(), MPFR_RNDD);
  } else {
    mpfr_set_zero(out.lo().get(), 1);
  }
  if (mpfr_sgn(a.hi().get()) > 0) {
    mpfr_sqrt(out.hi().get(), a.hi().get(), MPFR_RNDU);
  } else {
    mpfr_set_zero(out.hi().get(), 1);
  }
  return out;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) >= 0) return a;
  if (mpfr_sgn(a.hi().get()) <= 0) return -a;
  Interval out(a.precision());
  mpfr_set_zero(out.lo().get(), 1);
  mpfr_neg(out.hi().get(), a.lo().get(), MPFR_RNDU);
  mpfr_max(out.hi().get(), out.hi().get(), a.hi().get(), MPFR_RNDU);
  return out;
}

Interval pow(const Interval& a, unsigned k) {
  Interval result = Interval::from_integer(1, a.precision());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

Interval min(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_min(out.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(out.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return out;
}

Interval max(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_max(out.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(out.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return out;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_min(out.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(out.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return out;
}

namespace {

void clip_unit(BigFloat& v) {
  if (mpfr_cmp_si(v.get(), 1) > 0) mpfr_set_si(v.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(v.get(), -1) < 0) mpfr_set_si(v.get(), -1, MPFR_RNDN);
}

}  // namespace

Interval acos(const Interval& a) {
  BigFloat lo = a.lo();
  BigFloat hi = a.hi();
  clip_unit(lo);
  clip_unit(hi);
  Interval out(a.precision());
  mpfr_acos(out.lo().get(), hi.get(), MPFR_RNDD);
  mpfr_acos(out.hi().get(), lo.get(), MPFR_RNDU);
  return out;
}

Interval asin(const Interval& a) {
  BigFloat lo = a.lo();
  BigFloat hi = a.hi();
  clip_unit(lo);
  clip_unit(hi);
  Interval out(a.precision());
  mpfr_asin(out.lo().get(), lo.get(), MPFR_RNDD);
  mpfr_asin(out.hi().get(), hi.get(), MPFR_RNDU);
  return out;
}

Interval sin(const Interval& a) {
  const Precision prec = a.precision();
  BigFloat half_pi(prec);
  mpfr_const_pi(half_pi.get(), MPFR_RNDD);
  mpfr_div_2ui(half_pi.get(), half_pi.get(), 1, MPFR_RNDD);
  BigFloat neg_half_pi(prec);
  mpfr_neg(neg_half_pi.get(), half_pi.get(), MPFR_RNDN);
  Interval out(prec);
  if (mpfr_lessequal_p(a.hi().get(), half_pi.get()) && mpfr_greaterequal_p(a.lo().get(), neg_half_pi.get())) {
    mpfr_sin(out.lo().get(), a.lo().get(), MPFR_RNDD);
    mpfr_sin(out.hi().get(), a.hi().get(), MPFR_RNDU);
  } else {
    mpfr_set_si(out.lo().get(), -1, MPFR_RNDN);
    mpfr_set_si(out.hi().get(), 1, MPFR_RNDN);
  }
  return out;
}

std::string to_string(const Interval& a, int digits) {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDg", digits, a.lo().get());
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUg", digits, a.hi().get());
  out += buf.data();
  out += "]";
  return out;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Interval abs(const ComplexInterval& z) { return sqrt(sqr(z.re) + sqr(z.im)); }

}  // namespace degplus

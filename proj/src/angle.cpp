#include "degplus/angle.hpp"

#include "degplus/error.hpp"

namespace degplus {

CertifiedInteger certified_ceil(const std::function<Interval(Precision)>& eval,
                                const std::function<std::optional<bool>(const Integer&)>& at_most,
                                const PrecisionPolicy& policy, Conservative side) {
  for (Precision prec = policy.start_bits;; prec *= 2) {
    const Interval v = eval(prec);
    const Integer lo = v.ceil_lo();
    const Integer hi = v.ceil_hi();
    if (lo == hi) return {lo, true};
    bool undecided = false;
    for (Integer m = lo; m < hi; ++m) {
      const auto below = at_most(m);
      if (!below) {
        undecided = true;
        break;
      }
      if (*below) return {m, true};
    }
    if (!undecided) return {hi, true};
    if (prec >= policy.ceiling_bits) return {side == Conservative::High ? hi : lo, false};
  }
}

CertifiedInteger certified_floor(const std::function<Interval(Precision)>& eval,
                                 const std::function<std::optional<bool>(const Integer&)>& at_least,
                                 const PrecisionPolicy& policy, Conservative side) {
  for (Precision prec = policy.start_bits;; prec *= 2) {
    const Interval v = eval(prec);
    const Integer lo = v.floor_lo();
    const Integer hi = v.floor_hi();
    if (lo == hi) return {lo, true};
    bool undecided = false;
    for (Integer m = hi; m > lo; --m) {
      const auto above = at_least(m);
      if (!above) {
        undecided = true;
        break;
      }
      if (*above) return {m, true};
    }
    if (!undecided) return {lo, true};
    if (prec >= policy.ceiling_bits) return {side == Conservative::High ? hi : lo, false};
  }
}

namespace {

// a + b*c with c^2 = cc.
struct QuadraticSurd {
  Rational a;
  Rational b;
};

QuadraticSurd mul(const QuadraticSurd& x, const QuadraticSurd& y, const Rational& cc) {
  return {x.a * y.a + x.b * y.b * cc, x.a * y.b + x.b * y.a};
}

Interval multiple_of_pi(const Integer& k, const Integer& m, Precision prec) {
  Rational q(k, m);
  q.canonicalize();
  return Interval::pi(prec) * Interval::from_rational(q, prec);
}

}  // namespace

std::optional<bool> quadratic_argument_equals(const Polynomial& quadratic, const Integer& k, const Integer& m,
                                              const Interval& arg) {
  if (k <= 0 || k >= m) return false;
  const Polynomial g = monic(quadratic);
  const Rational a = g[1];
  const Rational b = g[0];
  const Precision prec = arg.precision();
  // Angles sharing T_m(cos phi) = (-1)^k are l pi / m with l = k mod 2.
  const Interval below = multiple_of_pi(k - 2, m, prec);
  const Interval above = multiple_of_pi(k + 2, m, prec);
  if (!below.certainly_less(arg) || !arg.certainly_less(above)) return std::nullopt;
  const Rational cc = a * a / (4 * b);
  const int c_sign = sgn(-a);
  // Chebyshev recurrence T_{n+1} = 2c T_n - T_{n-1}.
  QuadraticSurd prev{1, 0};
  QuadraticSurd cur{0, 1};
  const QuadraticSurd two_c{0, 2};
  const unsigned long steps = m.get_ui();
  for (unsigned long n = 1; n < steps; ++n) {
    QuadraticSurd next = mul(two_c, cur, cc);
    next.a -= prev.a;
    next.b -= prev.b;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Rational target = mpz_odd_p(k.get_mpz_t()) ? -1 : 1;
  if (cur.b == 0) return cur.a == target;
  const Rational c = (target - cur.a) / cur.b;
  return c * c == cc && sgn(c) == c_sign;
}

AngleOracle::AngleOracle(const Polynomial& p, const PrecisionPolicy& policy)
    : p_(monic(p)), policy_(policy), prec_(policy.start_bits) {
  if (p_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "angle of the zero polynomial");
  if (p_[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "angle oracle needs p(0) != 0");
  if (p_.degree() == 0) throw Error(ErrorCode::NoNonzeroRoots, "constant polynomial");
  load(prec_);
}

void AngleOracle::load(Precision prec) {
  roots_ = certified_roots(p_, prec, policy_);
  prec_ = roots_.front().center_re.precision();
  quadratics_.clear();
  for (const auto& r : roots_) quadratics_.push_back(rational_quadratic_factor(r));
}

Interval AngleOracle::phi0() const { return least_argument_of(roots_); }

Interval AngleOracle::phi0(Precision prec) {
  if (prec > prec_) load(prec);
  return phi0();
}

bool AngleOracle::refine() {
  if (prec_ >= policy_.ceiling_bits) return false;
  load(prec_ * 2);
  return true;
}

std::optional<int> AngleOracle::compare(const Integer& k, const Integer& m) const {
  const Interval theta = multiple_of_pi(k, m, prec_);
  bool undecided = false;
  bool equal = false;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const auto& r = roots_[i];
    const Interval arg = r.abs_argument();
    if (arg.certainly_less(theta)) return -1;
    if (theta.certainly_less(arg)) continue;
    if (r.is_real) {
      // Negative real root: argument pi.
      const int s = sgn(m - k);
      if (s < 0) return -1;
      if (s == 0) equal = true;
      continue;
    }
    if (quadratics_[i]) {
      const auto eq = quadratic_argument_equals(*quadratics_[i], k, m, arg);
      if (eq && *eq) {
        equal = true;
        continue;
      }
    }
    undecided = true;
  }
  if (undecided) return std::nullopt;
  return equal ? 0 : 1;
}

CertifiedInteger AngleOracle::ceil_ratio(unsigned long k, Conservative side) {
  const Integer kk = k;
  auto eval = [&](Precision prec) {
    const Interval phi = phi0(prec);
    return Interval::pi(prec_) * Interval::from_integer(static_cast<long>(k), prec_) / phi;
  };
  // k pi / phi0 <= m  iff  phi0 >= k pi / m
  auto at_most = [&](const Integer& m) -> std::optional<bool> {
    if (m <= 0) return false;
    const auto c = compare(kk, m);
    if (!c) return std::nullopt;
    return *c >= 0;
  };
  return certified_ceil(eval, at_most, policy_, side);
}

CertifiedInteger AngleOracle::floor_ratio(unsigned long k, Conservative side) {
  const Integer kk = k;
  auto eval = [&](Precision prec) {
    const Interval phi = phi0(prec);
    return Interval::pi(prec_) * Interval::from_integer(static_cast<long>(k), prec_) / phi;
  };
  auto at_least = [&](const Integer& m) -> std::optional<bool> {
    if (m <= 0) return true;
    const auto c = compare(kk, m);
    if (!c) return std::nullopt;
    return *c <= 0;
  };
  return certified_floor(eval, at_least, policy_, side);
}

}  // namespace degplus

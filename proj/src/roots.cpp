#include "degplus/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "degplus/error.hpp"

namespace degplus {

std::string_view to_string(PositivityClass c) {
  switch (c) {
    case PositivityClass::HasPositiveRealRoot: return "HasPositiveRealRoot";
    case PositivityClass::NonNegCoefficients: return "NonNegCoefficients";
    case PositivityClass::PositiveOnPositiveAxis: return "PositiveOnPositiveAxis";
  }
  return "Unknown";
}

Polynomial sign_normalize(const Polynomial& p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& q) {
  std::vector<Polynomial> seq{q, derivative(q)};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& s : seq) signs.push_back(sgn(s.eval(x)));
  return variations(signs);
}

int variations_at_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& s : seq) signs.push_back(sgn(s.leading()));
  return variations(signs);
}

// Squarefree part of p with roots at zero removed; constant when p has no
// nonzero roots.
Polynomial nonzero_root_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "positive root count of zero");
  const auto split = strip_x_power(p);
  if (split.rest.degree() == 0) return Polynomial::constant(1);
  return squarefree_part(split.rest);
}

Rational cauchy_root_bound(const Polynomial& q) {
  Rational m = 0;
  const Rational& lead = q.leading();
  for (std::size_t i = 0; i < q.degree(); ++i) m = std::max<Rational>(m, abs(q[i] / lead));
  return 1 + m;
}

}  // namespace

std::size_t count_positive_roots(const Polynomial& p) {
  const Polynomial q = nonzero_root_part(p);
  if (q.degree() == 0) return 0;
  const auto seq = sturm_sequence(q);
  return static_cast<std::size_t>(variations_at(seq, 0) - variations_at_infinity(seq));
}

std::optional<std::pair<Rational, Rational>> isolate_positive_root(const Polynomial& p) {
  const Polynomial q = nonzero_root_part(p);
  if (q.degree() == 0) return std::nullopt;
  const auto seq = sturm_sequence(q);
  auto count = [&](const Rational& a, const Rational& b) { return variations_at(seq, a) - variations_at(seq, b); };
  Rational lo = 0;
  Rational hi = cauchy_root_bound(q);
  if (count(lo, hi) == 0) return std::nullopt;
  const Rational max_width(1, 4);
  while (count(lo, hi) > 1 || hi - lo > max_width) {
    const Rational mid = (lo + hi) / 2;
    if (count(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::make_pair(lo, hi);
}

PositivityClass classify(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "classify needs a nonzero polynomial");
  const Polynomial q = sign_normalize(p);
  if (count_positive_roots(q) > 0) return PositivityClass::HasPositiveRealRoot;
  if (q.has_nonnegative_coeffs()) return PositivityClass::NonNegCoefficients;
  return PositivityClass::PositiveOnPositiveAxis;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich iteration in MPFR

namespace {

struct Cx {
  BigFloat re;
  BigFloat im;
  explicit Cx(Precision prec) : re(prec), im(prec) {}
};

Cx cx_from(double re, double im, Precision prec) {
  Cx z(prec);
  mpfr_set_d(z.re.get(), re, MPFR_RNDN);
  mpfr_set_d(z.im.get(), im, MPFR_RNDN);
  return z;
}

Cx cx_convert(const Cx& z, Precision prec) {
  Cx out(prec);
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  return out;
}

void cx_add(Cx& out, const Cx& a, const Cx& b) {
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cx_sub(Cx& out, const Cx& a, const Cx& b) {
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// out may alias neither a nor b.
void cx_mul(Cx& out, const Cx& a, const Cx& b, BigFloat& t) {
  mpfr_mul(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), out.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), out.im.get(), t.get(), MPFR_RNDN);
}

// Returns false when b is zero.
bool cx_div(Cx& out, const Cx& a, const Cx& b, BigFloat& t, BigFloat& den) {
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  if (mpfr_zero_p(den.get())) return false;
  // (a.re + i a.im)(b.re - i b.im) / den
  mpfr_mul(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(out.re.get(), out.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), out.im.get(), t.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), out.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), den.get(), MPFR_RNDN);
  return true;
}

void cx_abs(BigFloat& out, const Cx& z) { mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN); }

std::vector<Cx> initial_guesses(const Polynomial& f, Precision prec) {
  const std::size_t n = f.degree();
  const double lead = std::abs(f.leading().get_d());
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double c = std::abs(f[n - k].get_d()) / lead;
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / static_cast<double>(k)));
  }
  if (radius == 0.0 || !std::isfinite(radius)) radius = 1.0;
  std::vector<Cx> z;
  z.reserve(n);
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z.push_back(cx_from(radius * std::cos(angle), radius * std::sin(angle), prec));
  }
  return z;
}

// Runs Aberth iterations in place until the corrections stall at the working
// precision or the iteration budget runs out.
void aberth(const Polynomial& f, std::vector<Cx>& z, Precision prec) {
  const std::size_t n = f.degree();
  std::vector<Cx> coeffs;
  coeffs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Cx c(prec);
    mpfr_set_q(c.re.get(), f[k].get_mpq_t(), MPFR_RNDN);
    coeffs.push_back(std::move(c));
  }
  Cx val(prec), dval(prec), tmp(prec), ratio(prec), sum(prec), diff(prec), inv(prec), w(prec), one(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  BigFloat t(prec), den(prec), mag(prec), scale(prec), worst(prec), threshold(prec);
  mpfr_set_ui(threshold.get(), 1, MPFR_RNDN);
  mpfr_div_2si(threshold.get(), threshold.get(), static_cast<long>(prec) - 8, MPFR_RNDN);
  const int max_iter = 80 + static_cast<int>(prec / 4);
  for (int iter = 0; iter < max_iter; ++iter) {
    mpfr_set_zero(worst.get(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      // Horner for f and f'.
      mpfr_set(val.re.get(), coeffs[n].re.get(), MPFR_RNDN);
      mpfr_set_zero(val.im.get(), 1);
      mpfr_set_zero(dval.re.get(), 1);
      mpfr_set_zero(dval.im.get(), 1);
      for (std::size_t k = n; k-- > 0;) {
        cx_mul(tmp, dval, z[i], t);
        cx_add(dval, tmp, val);
        cx_mul(tmp, val, z[i], t);
        cx_add(val, tmp, coeffs[k]);
      }
      if (!cx_div(ratio, val, dval, t, den)) {
        // Stationary point: nudge.
        mpfr_add_d(z[i].re.get(), z[i].re.get(), 1e-3, MPFR_RNDN);
        mpfr_set_inf(worst.get(), 1);
        continue;
      }
      mpfr_set_zero(sum.re.get(), 1);
      mpfr_set_zero(sum.im.get(), 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        cx_sub(diff, z[i], z[j]);
        if (!cx_div(inv, one, diff, t, den)) continue;
        cx_add(tmp, sum, inv);
        std::swap(sum, tmp);
      }
      cx_mul(tmp, ratio, sum, t);
      cx_sub(diff, one, tmp);
      if (!cx_div(w, ratio, diff, t, den)) {
        std::swap(w, ratio);
      }
      cx_sub(tmp, z[i], w);
      std::swap(z[i], tmp);
      cx_abs(mag, w);
      cx_abs(scale, z[i]);
      if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
      mpfr_div(mag.get(), mag.get(), scale.get(), MPFR_RNDN);
      mpfr_max(worst.get(), worst.get(), mag.get(), MPFR_RNDN);
    }
    if (mpfr_lessequal_p(worst.get(), threshold.get())) {
      // One more sweep is harmless and sharpens the last digits.
      if (iter > 0) break;
    }
  }
}

struct Disk {
  BigFloat re;
  BigFloat im;
  BigFloat radius;
};

Interval coefficient_interval(const Rational& c, Precision prec) { return Interval::from_rational(c, prec); }

// Certified inclusion disks for the approximations z of the squarefree f:
// all roots lie in the union of D(z_i, n |W_i|) with W_i the Weierstrass
// correction, and a component made of k disks holds exactly k roots.
std::optional<std::vector<Disk>> certify_aberth(const Polynomial& f, const std::vector<Cx>& z, Precision prec) {
  const std::size_t n = f.degree();
  std::vector<Disk> disks;
  disks.reserve(n);
  std::vector<ComplexInterval> points;
  points.reserve(n);
  for (const auto& zi : z) points.emplace_back(Interval::point(zi.re), Interval::point(zi.im));
  const Interval lead = abs(coefficient_interval(f.leading(), prec));
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval val(coefficient_interval(f[n], prec), Interval(prec));
    for (std::size_t k = n; k-- > 0;) {
      val = val * points[i];
      val.re = val.re + coefficient_interval(f[k], prec);
    }
    Interval den = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      den = den * abs(points[i] - points[j]);
    }
    if (!den.certainly_positive()) return std::nullopt;
    const Interval r = abs(val) / den * Interval::from_integer(static_cast<long>(n), prec);
    Disk d{z[i].re, z[i].im, r.hi()};
    disks.push_back(std::move(d));
  }
  return disks;
}

Disk disk_from_box(const Interval& re, const Interval& im) {
  const Precision prec = re.precision();
  Disk d{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
  mpfr_add(d.re.get(), re.lo().get(), re.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(d.re.get(), d.re.get(), 1, MPFR_RNDN);
  mpfr_add(d.im.get(), im.lo().get(), im.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(d.im.get(), d.im.get(), 1, MPFR_RNDN);
  // The box fits inside the disk of radius width_re + width_im about its midpoint.
  BigFloat wr = re.width();
  BigFloat wi = im.width();
  mpfr_add(d.radius.get(), wr.get(), wi.get(), MPFR_RNDU);
  return d;
}

// Closed-form enclosures for linear and quadratic factors.
std::vector<Disk> low_degree_disks(const Polynomial& f, Precision prec) {
  const Interval zero(prec);
  if (f.degree() == 1) {
    return {disk_from_box(Interval::from_rational(-f[0] / f[1], prec), zero)};
  }
  const Rational a = f[1] / f[2];
  const Rational b = f[0] / f[2];
  const Rational disc = a * a - 4 * b;
  const Interval half_a = Interval::from_rational(-a / 2, prec);
  const Interval half_root = sqrt(Interval::from_rational(abs(disc) / 4, prec));
  if (disc < 0) {
    return {disk_from_box(half_a, half_root), disk_from_box(half_a, -half_root)};
  }
  return {disk_from_box(half_a + half_root, zero), disk_from_box(half_a - half_root, zero)};
}

struct FactorState {
  Polynomial factor;
  unsigned multiplicity;
  std::vector<Cx> approx;
};

bool disks_disjoint(const Disk& a, const Disk& b, Precision prec) {
  ComplexInterval ca(Interval::point(a.re), Interval::point(a.im));
  ComplexInterval cb(Interval::point(b.re), Interval::point(b.im));
  const Interval dist = abs(ca - cb);
  BigFloat rsum(prec);
  mpfr_add(rsum.get(), a.radius.get(), b.radius.get(), MPFR_RNDU);
  return mpfr_greater_p(dist.lo().get(), rsum.get());
}

// Conjugate of `d` overlaps another disk of the same factor?
bool conjugate_escapes(const Disk& d, const std::vector<Disk>& same_factor, std::size_t self, Precision prec) {
  Disk conj{d.re, d.im, d.radius};
  mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
  for (std::size_t j = 0; j < same_factor.size(); ++j) {
    if (j == self) continue;
    if (!disks_disjoint(conj, same_factor[j], prec)) return true;
  }
  return false;
}

std::optional<std::vector<RootEnclosure>> attempt(std::vector<FactorState>& states, Precision prec,
                                                  std::optional<double> target_radius) {
  std::vector<RootEnclosure> out;
  std::vector<std::size_t> owner;
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto& st = states[s];
    std::vector<Disk> disks;
    if (st.factor.degree() <= 2) {
      disks = low_degree_disks(st.factor, prec);
    } else {
      if (st.approx.empty()) {
        st.approx = initial_guesses(st.factor, prec);
      } else {
        for (auto& z : st.approx) z = cx_convert(z, prec);
      }
      aberth(st.factor, st.approx, prec);
      auto certified = certify_aberth(st.factor, st.approx, prec);
      if (!certified) return std::nullopt;
      disks = std::move(*certified);
    }
    for (std::size_t i = 0; i < disks.size(); ++i) {
      RootEnclosure root{disks[i].re, disks[i].im, disks[i].radius, st.multiplicity, false, st.factor};
      if (mpfr_cmpabs(root.center_im.get(), root.radius.get()) <= 0) {
        if (conjugate_escapes(disks[i], disks, i, prec)) return std::nullopt;
        root.is_real = true;
        mpfr_set_zero(root.center_im.get(), 1);
      }
      out.push_back(std::move(root));
      owner.push_back(s);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (target_radius && mpfr_cmp_d(out[i].radius.get(), *target_radius) > 0) return std::nullopt;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      Disk a{out[i].center_re, out[i].center_im, out[i].radius};
      Disk b{out[j].center_re, out[j].center_im, out[j].radius};
      if (!disks_disjoint(a, b, prec)) return std::nullopt;
    }
  }
  return out;
}

std::vector<RootEnclosure> roots_impl(const Polynomial& p, Precision start, const PrecisionPolicy& policy,
                                      std::optional<double> target_radius) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "roots need degree >= 1");
  std::vector<FactorState> states;
  for (auto& sf : squarefree_decomposition(p)) states.push_back({sf.factor, sf.multiplicity, {}});
  for (Precision prec = std::max<Precision>(start, 32);; prec *= 2) {
    if (auto roots = attempt(states, prec, target_radius)) return std::move(*roots);
    if (prec >= policy.ceiling_bits) break;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "root enclosures did not certify within " + std::to_string(policy.ceiling_bits) + " bits");
}

}  // namespace

std::vector<RootEnclosure> compute_roots(const Polynomial& p, double target_radius, const PrecisionPolicy& policy) {
  return roots_impl(p, policy.start_bits, policy, target_radius);
}

std::vector<RootEnclosure> certified_roots(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  return roots_impl(p, prec, policy, std::nullopt);
}

// ---------------------------------------------------------------------------
// Derived quantities

Interval RootEnclosure::modulus() const {
  const Precision prec = center_re.precision();
  ComplexInterval c(Interval::point(center_re), Interval::point(center_im));
  Interval m = abs(c);
  Interval out(prec);
  mpfr_sub(out.lo().get(), m.lo().get(), radius.get(), MPFR_RNDD);
  if (mpfr_sgn(out.lo().get()) < 0) mpfr_set_zero(out.lo().get(), 1);
  mpfr_add(out.hi().get(), m.hi().get(), radius.get(), MPFR_RNDU);
  return out;
}

Interval RootEnclosure::abs_argument() const {
  const Precision prec = center_re.precision();
  const Interval pi = Interval::pi(prec);
  Interval full(prec);
  mpfr_set(full.hi().get(), pi.hi().get(), MPFR_RNDU);
  if (is_real) {
    BigFloat edge(prec);
    mpfr_add(edge.get(), center_re.get(), radius.get(), MPFR_RNDU);
    if (mpfr_sgn(edge.get()) < 0) return pi;
    mpfr_sub(edge.get(), center_re.get(), radius.get(), MPFR_RNDD);
    if (mpfr_sgn(edge.get()) > 0) return Interval(prec);
    return full;
  }
  ComplexInterval c(Interval::point(center_re), Interval::point(center_im));
  const Interval m = abs(c);
  if (mpfr_lessequal_p(m.lo().get(), radius.get())) return full;
  BigFloat y(prec);
  mpfr_abs(y.get(), center_im.get(), MPFR_RNDN);
  Interval theta(prec);
  mpfr_atan2(theta.lo().get(), y.get(), center_re.get(), MPFR_RNDD);
  mpfr_atan2(theta.hi().get(), y.get(), center_re.get(), MPFR_RNDU);
  BigFloat ratio(prec);
  mpfr_div(ratio.get(), radius.get(), m.lo().get(), MPFR_RNDU);
  if (mpfr_cmp_ui(ratio.get(), 1) > 0) mpfr_set_ui(ratio.get(), 1, MPFR_RNDN);
  BigFloat delta(prec);
  mpfr_asin(delta.get(), ratio.get(), MPFR_RNDU);
  Interval out(prec);
  mpfr_sub(out.lo().get(), theta.lo().get(), delta.get(), MPFR_RNDD);
  if (mpfr_sgn(out.lo().get()) < 0) mpfr_set_zero(out.lo().get(), 1);
  mpfr_add(out.hi().get(), theta.hi().get(), delta.get(), MPFR_RNDU);
  mpfr_min(out.hi().get(), out.hi().get(), pi.hi().get(), MPFR_RNDU);
  return out;
}

namespace {

std::optional<Rational> best_rational(const Rational& x, const Rational& tol) {
  // Continued-fraction convergents of x until within tol.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Rational rest = x;
  for (int step = 0; step < 400; ++step) {
    const Integer a = floor(rest);
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    const Rational conv(h, k);
    if (abs(x - conv) <= tol) {
      Rational out = conv;
      out.canonicalize();
      return out;
    }
    const Rational frac = rest - a;
    if (frac == 0) return std::nullopt;
    rest = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polynomial> rational_quadratic_factor(const RootEnclosure& root) {
  if (root.is_real || root.factor.is_zero()) return std::nullopt;
  if (root.factor.degree() == 2) return root.factor;
  if (root.factor.degree() < 2) return std::nullopt;
  const Rational re = root.center_re.to_rational();
  const Rational im = root.center_im.to_rational();
  const Rational rad = root.radius.to_rational();
  const Rational size = 1 + abs(re) + abs(im);
  const Rational tol = 8 * rad * size + Rational(1, 1) / Rational(Integer(1) << 60);
  const auto a = best_rational(-2 * re, tol);
  const auto b = best_rational(re * re + im * im, tol * (2 * size));
  if (!a || !b) return std::nullopt;
  Polynomial g({*b, *a, 1});
  if (*a * *a - 4 * *b >= 0) return std::nullopt;
  if (!divides(g, root.factor)) return std::nullopt;
  return g;
}

Rational magnitude_bound(const Polynomial& p, MagnitudeBoundKind kind) {
  if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "magnitude bound needs a monic polynomial");
  const std::size_t d = p.degree();
  if (kind == MagnitudeBoundKind::CauchyPlusOne) {
    Rational m = 0;
    for (std::size_t i = 0; i < d; ++i) m = std::max<Rational>(m, abs(p[i]));
    return 1 + m;
  }
  Rational s = 1;
  for (std::size_t i = 0; i < d; ++i) s += p[i] * p[i];
  // Smallest denominator q with a fraction t/q in [sqrt(s), 1.01 sqrt(s)].
  const Rational slack(10201, 10000);
  for (Integer q = 1;; ++q) {
    const Rational target = Rational(q * q) * s;
    Integer t;
    const Integer fl = floor(target);
    mpz_sqrt(t.get_mpz_t(), fl.get_mpz_t());
    while (Rational(t * t) < target) ++t;
    const Rational cand(t, q);
    if (cand * cand <= slack * s) {
      Rational out = cand;
      out.canonicalize();
      return out;
    }
  }
}

Interval least_argument_of(const std::vector<RootEnclosure>& roots) {
  std::optional<Interval> best;
  for (const auto& r : roots) {
    const Interval m = r.modulus();
    if (mpfr_zero_p(m.hi().get())) continue;  // root at zero
    const Interval a = r.abs_argument();
    best = best ? min(*best, a) : a;
  }
  if (!best) throw Error(ErrorCode::NoNonzeroRoots, "polynomial has no nonzero roots");
  return *best;
}

Interval mahler_of(const std::vector<RootEnclosure>& roots) {
  const Precision prec = roots.empty() ? 128 : roots.front().center_re.precision();
  Interval out = Interval::from_integer(1, prec);
  const Interval one = Interval::from_integer(1, prec);
  for (const auto& r : roots) out = out * pow(max(one, r.modulus()), r.multiplicity);
  return out;
}

Interval dubickas_of(const std::vector<RootEnclosure>& roots) {
  const Precision prec = roots.empty() ? 128 : roots.front().center_re.precision();
  std::vector<BigFloat> lows;
  std::vector<BigFloat> highs;
  for (const auto& r : roots) {
    const Interval m = r.modulus();
    for (unsigned k = 0; k < r.multiplicity; ++k) {
      lows.push_back(m.lo());
      highs.push_back(m.hi());
    }
  }
  auto desc = [](const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; };
  std::sort(lows.begin(), lows.end(), desc);
  std::sort(highs.begin(), highs.end(), desc);
  // The sorted assignment maximizes the weighted product, so sorting each
  // endpoint list separately still encloses T.
  const std::size_t d = lows.size();
  Interval lo_prod = Interval::from_integer(1, prec);
  Interval hi_prod = Interval::from_integer(1, prec);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const auto e = static_cast<unsigned>(d - 1 - i);
    lo_prod = lo_prod * pow(Interval::point(lows[i]), e);
    hi_prod = hi_prod * pow(Interval::point(highs[i]), e);
  }
  return Interval(lo_prod.lo(), hi_prod.hi());
}

Interval least_positive_argument(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  if (classify(p) == PositivityClass::HasPositiveRealRoot) {
    throw Error(ErrorCode::WrongClass, "least positive argument needs a polynomial without positive roots");
  }
  const auto split = strip_x_power(p);
  if (split.rest.degree() == 0) throw Error(ErrorCode::NoNonzeroRoots, "c*x^k has no nonzero roots");
  return least_argument_of(certified_roots(split.rest, prec, policy));
}

Interval mahler_measure(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  return mahler_of(certified_roots(monic(p), prec, policy));
}

Interval dubickas_T(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  if (p.is_zero() || p.degree() < 2) throw Error(ErrorCode::DegreeTooLow, "T needs degree >= 2");
  return dubickas_of(certified_roots(monic(p), prec, policy));
}

RootData analyze_roots(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root analysis of zero");
  if (p.degree() < 2) throw Error(ErrorCode::DegreeTooLow, "root analysis needs degree >= 2");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "root analysis needs p(0) != 0");
  const Polynomial q = monic(p);
  auto roots = certified_roots(q, prec, policy);
  Interval phi0 = least_argument_of(roots);
  Interval mahler = mahler_of(roots);
  Interval t = dubickas_of(roots);
  const Rational l = std::min(magnitude_bound(q, MagnitudeBoundKind::CauchyPlusOne),
                              magnitude_bound(q, MagnitudeBoundKind::EuclideanNorm));
  return RootData{std::move(roots), std::move(phi0), std::move(mahler), l, std::move(t), discriminant(q)};
}

}  // namespace degplus

#include "degplus/bounds.hpp"

#include <algorithm>
#include <deque>

#include "degplus/error.hpp"
#include "degplus/search.hpp"

namespace degplus {

namespace {

constexpr std::size_t kFallbackCap = 100000;

void require_recurrence_shape(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "recurrence of zero");
  if (p.degree() < 2) throw Error(ErrorCode::BadDegree, "recurrence bounds need degree >= 2");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "recurrence bounds need p(0) != 0");
}

std::size_t recurrence(const Polynomial& p, std::size_t cap) {
  const Polynomial q = monic(p);
  const std::size_t d = q.degree();
  std::deque<Rational> window(d, 0);
  window.back() = 1;  // r_{d-1}
  for (std::size_t n = d;; ++n) {
    if (n > cap) throw Error(ErrorCode::CapExceeded, "recurrence reached cap " + std::to_string(cap));
    Rational next = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (q[i] != 0 && window[i] != 0) next -= q[i] * window[i];
    }
    if (next <= 0) return n;
    window.pop_front();
    window.push_back(std::move(next));
  }
}

Polynomial require_positive_on_axis(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bound of the zero polynomial");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "bound needs p(0) != 0");
  const PositivityClass c = classify(p);
  if (c != PositivityClass::PositiveOnPositiveAxis) {
    throw Error(ErrorCode::WrongClass, "bound needs a polynomial positive on (0, inf) with a negative coefficient, got " +
                                           std::string(to_string(c)));
  }
  return monic(p);
}

Polynomial require_quadratic_shape(const Polynomial& p, ErrorCode code) {
  if (p.is_zero() || p.degree() != 2) throw Error(code, "expected a quadratic");
  if (classify(p) != PositivityClass::PositiveOnPositiveAxis) {
    throw Error(code == ErrorCode::NotQuadratic ? ErrorCode::WrongClass : code,
                "expected complex roots with positive real part");
  }
  return monic(p);
}

struct Counted {
  std::size_t value;
  bool exact;
};

std::size_t to_size(const Integer& v) { return static_cast<std::size_t>(v.get_ui()); }

Counted structural_impl(const Polynomial& p, const PrecisionPolicy& policy) {
  const Polynomial q = require_positive_on_axis(p);
  AngleOracle oracle(q, policy);
  const auto n = oracle.ceil_ratio(1, Conservative::High);
  const std::size_t d = q.degree();
  return {(d / 2) * (to_size(n.value) - 2) + d, n.exact};
}

Counted turan_impl(const Polynomial& p, const PrecisionPolicy& policy) {
  const Polynomial q = require_positive_on_axis(p);
  AngleOracle oracle(q, policy);
  std::optional<int> vs_right_angle = oracle.compare(1, 2);
  while (!vs_right_angle && oracle.refine()) vs_right_angle = oracle.compare(1, 2);
  if (!vs_right_angle || *vs_right_angle > 0) {
    throw Error(ErrorCode::AngleTooLarge, "least argument exceeds pi/2");
  }
  const auto f = oracle.floor_ratio(1, Conservative::High);
  const std::size_t d = q.degree();
  const std::size_t twice = d * (to_size(f.value) + 1);
  return {(twice + 1) / 2, f.exact};
}

struct DiscriminantData {
  Polynomial q;
  std::size_t d;
  Rational abs_disc_over_power;  // |disc| / d^(d+3)
};

DiscriminantData discriminant_data(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bound of the zero polynomial");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "bound needs p(0) != 0");
  const Polynomial q = monic(p);
  if (!is_squarefree(q)) throw Error(ErrorCode::NotSquarefree, "bound needs a squarefree polynomial");
  require_positive_on_axis(q);
  const std::size_t d = q.degree();
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), d, d + 3);
  Rational ratio = abs(discriminant(q)) / Rational(power);
  return {q, d, ratio};
}

Interval sine_argument_mahler(const DiscriminantData& dd, Precision prec, const PrecisionPolicy& policy) {
  const Interval m = mahler_of(certified_roots(dd.q, prec, policy));
  const Precision work = m.precision();
  return sqrt(Interval::from_rational(dd.abs_disc_over_power, work)) /
         pow(m, static_cast<unsigned>(dd.d - 1));
}

// sin^2(pi/m) for the m where it is rational.
std::optional<Rational> rational_sine_square(const Integer& m) {
  if (m == 2) return Rational(1);
  if (m == 3) return Rational(3, 4);
  if (m == 4) return Rational(1, 2);
  if (m == 6) return Rational(1, 4);
  return std::nullopt;
}

Counted estim_impl(const Polynomial& p, EstimKind kind, const PrecisionPolicy& policy) {
  const DiscriminantData dd = discriminant_data(p);
  std::function<Interval(Precision)> x_of;
  std::function<std::optional<bool>(const Integer&)> at_most;
  std::optional<Rational> x_square;
  if (kind == EstimKind::MagnitudePower) {
    const Rational l = std::min(magnitude_bound(dd.q, MagnitudeBoundKind::CauchyPlusOne),
                                magnitude_bound(dd.q, MagnitudeBoundKind::EuclideanNorm));
    Rational l_power = 1;
    for (std::size_t i = 0; i < dd.d * (dd.d - 1); ++i) l_power *= l;
    x_square = dd.abs_disc_over_power / l_power;
    x_of = [&](Precision prec) { return sqrt(Interval::from_rational(*x_square, prec)); };
  } else {
    x_of = [&](Precision prec) { return sine_argument_mahler(dd, prec, policy); };
  }
  // pi / arcsin(x) <= m  iff  x >= sin(pi/m)
  at_most = [&](const Integer& m) -> std::optional<bool> {
    if (m <= 1) return false;
    if (!x_square) return std::nullopt;
    const auto s2 = rational_sine_square(m);
    if (!s2) return std::nullopt;
    return *x_square >= *s2;
  };
  auto eval = [&](Precision prec) {
    const Interval x = x_of(prec);
    return Interval::pi(x.precision()) / asin(x);
  };
  const auto n = certified_ceil(eval, at_most, policy, Conservative::High);
  return {(dd.d / 2) * (to_size(n.value) - 2) + dd.d, n.exact};
}

Counted zaimi_impl(const Polynomial& p, const PrecisionPolicy& policy) {
  const DiscriminantData dd = discriminant_data(p);
  auto eval = [&](Precision prec) { return zaimi_value(dd.q, prec, policy); };
  auto at_least = [](const Integer&) -> std::optional<bool> { return std::nullopt; };
  const auto v = certified_floor(eval, at_least, policy, Conservative::High);
  return {to_size(v.value), v.exact};
}

}  // namespace

std::size_t lower_recurrence_up(const Polynomial& p, std::optional<std::size_t> cap) {
  require_recurrence_shape(p);
  return recurrence(p, cap ? *cap : default_recurrence_cap(p));
}

std::size_t lower_recurrence_down(const Polynomial& p, std::optional<std::size_t> cap) {
  require_recurrence_shape(p);
  return recurrence(reverse(p), cap ? *cap : default_recurrence_cap(p));
}

std::size_t default_recurrence_cap(const Polynomial& p, const PrecisionPolicy& policy) {
  try {
    return structural_impl(p, policy).value + p.degree();
  } catch (const Error&) {
    return kFallbackCap;
  }
}

QuadraticResult exact_quadratic(const Polynomial& p, const PrecisionPolicy& policy) {
  const Polynomial q = require_quadratic_shape(p, ErrorCode::NotQuadratic);
  AngleOracle oracle(q, policy);
  const auto n = oracle.ceil_ratio(1);
  if (n.exact) return {to_size(n.value), false};
  return {deg_plus_finite(q).deg_plus, true};
}

CubicResult exact_cubic(const Polynomial& p, const PrecisionPolicy& policy) {
  if (p.is_zero() || p.degree() != 3) throw Error(ErrorCode::NotCubic, "expected a cubic");
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "cubic needs p(0) != 0");
  const Polynomial q = require_positive_on_axis(p);
  CubicResult out;
  const std::size_t cap = default_recurrence_cap(q, policy);
  out.n_up = recurrence(q, cap);
  out.n_down = recurrence(reverse(q), cap);
  out.value = std::max(out.n_up, out.n_down);

  AngleOracle oracle(q, policy);
  const auto n = oracle.ceil_ratio(1);
  const RootEnclosure* real = nullptr;
  const RootEnclosure* upper = nullptr;
  for (const auto& r : oracle.roots()) {
    if (r.is_real) {
      real = &r;
    } else if (mpfr_sgn(r.center_im.get()) > 0) {
      upper = &r;
    }
  }
  if (!real || !upper || !n.exact) return out;
  const Precision prec = oracle.precision();
  const Interval half_pi = Interval::pi(prec) / Interval::from_integer(2, prec);
  CubicGeometry g{real->modulus(), upper->modulus(), upper->abs_argument(), to_size(n.value), Interval(prec),
                  Interval(prec)};
  if (!g.phi.certainly_less(half_pi)) return out;
  g.eps = Interval::from_integer(static_cast<long>(g.n), prec) * g.phi - Interval::pi(prec);
  g.s = min(g.c / g.r, g.r / g.c);
  const Interval lhs = sin(g.phi - g.eps);
  Interval tail = pow(g.s, static_cast<unsigned>(g.n)) * sin(g.phi);
  if (g.n % 2 == 0) tail = -tail;
  const Interval rhs = g.s * sin(g.eps) + tail;
  if (lhs.certainly_less_equal(rhs)) {
    out.criterion_value = g.n;
  } else if (rhs.certainly_less(lhs)) {
    out.criterion_value = g.n + 1;
  } else {
    out.criterion_lp_fallback = true;
    out.criterion_value = std::holds_alternative<Witness>(feasible_at(q, g.n)) ? g.n : g.n + 1;
  }
  out.geometry = std::move(g);
  out.consistent = *out.criterion_value == out.value;
  return out;
}

std::pair<std::size_t, std::size_t> power_bounds(const Polynomial& p, unsigned k, const PrecisionPolicy& policy) {
  if (k < 1) throw Error(ErrorCode::WrongShape, "power must be at least 1");
  const Polynomial q = require_quadratic_shape(p, ErrorCode::WrongShape);
  AngleOracle oracle(q, policy);
  const auto lower = oracle.ceil_ratio(k, Conservative::Low);
  const auto single = oracle.ceil_ratio(1, Conservative::High);
  return {to_size(lower.value), k * to_size(single.value)};
}

std::size_t upper_structural(const Polynomial& p, const PrecisionPolicy& policy) {
  return structural_impl(p, policy).value;
}

std::size_t upper_turan(const Polynomial& p, const PrecisionPolicy& policy) { return turan_impl(p, policy).value; }

std::size_t upper_estim(const Polynomial& p, EstimKind kind, const PrecisionPolicy& policy) {
  return estim_impl(p, kind, policy).value;
}

Interval zaimi_value(const Polynomial& p, Precision prec, const PrecisionPolicy& policy) {
  const DiscriminantData dd = discriminant_data(p);
  const Interval x = sine_argument_mahler(dd, prec, policy);
  const Precision work = x.precision();
  return Interval::from_integer(static_cast<long>(2 * dd.d), work) * Interval::pi(work) / asin(x);
}

std::size_t upper_zaimi(const Polynomial& p, const PrecisionPolicy& policy) { return zaimi_impl(p, policy).value; }

std::optional<std::size_t> BoundsReport::best_lower() const {
  std::optional<std::size_t> best;
  for (const BoundEntry* e : {&n_up, &n_down, &lower_angle_power, &exact_closed_form}) {
    if (e->value) best = best ? std::max(*best, *e->value) : *e->value;
  }
  return best;
}

std::optional<std::size_t> BoundsReport::best_upper() const {
  std::optional<std::size_t> best;
  for (const BoundEntry* e : {&upper_structural, &upper_turan, &upper_estim_M, &upper_estim_L, &exact_closed_form}) {
    if (e->value) best = best ? std::min(*best, *e->value) : *e->value;
  }
  return best;
}

namespace {

template <typename F>
void fill(BoundEntry& entry, std::string provenance, std::size_t shift, F&& compute) {
  entry.provenance = std::move(provenance);
  try {
    const Counted c = compute();
    entry.value = c.value + shift;
    entry.conservative = !c.exact;
  } catch (const Error& e) {
    entry.value.reset();
    entry.reason = e.what();
  }
}

void not_applicable(BoundEntry& entry, std::string provenance, std::string reason) {
  entry.provenance = std::move(provenance);
  entry.value.reset();
  entry.reason = std::move(reason);
}

}  // namespace

BoundsReport report(const Polynomial& p, const PrecisionPolicy& policy) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "report of the zero polynomial");
  const auto split = strip_x_power(p);
  const Polynomial q = monic(split.rest);
  const std::size_t k = split.power;
  BoundsReport rep;
  rep.stripped_x_power = k;
  rep.degree = p.degree();
  rep.positivity = classify(q);
  if (rep.positivity == PositivityClass::HasPositiveRealRoot) {
    throw Error(ErrorCode::PositiveRootPresent, "p has a positive real root, deg+ is infinite");
  }
  const std::size_t d = q.degree();
  const std::string n_up_label = "recurrence lower bound n-up";
  const std::string n_down_label = "recurrence lower bound n-down (reversed polynomial)";
  const std::string angle_label = "angle lower bound ceil(k pi / phi) for a power of a quadratic";
  const std::string structural_label = "least-argument structural bound";
  const std::string turan_label = "Turan angle-domain bound";
  const std::string estim_m_label = "discriminant bound with K = Mahler measure";
  const std::string estim_l_label = "discriminant bound with K = L^(d/2)";
  const std::string zaimi_label = "Zaimi discriminant bound (assumes irreducibility)";

  if (d == 0 || rep.positivity == PositivityClass::NonNegCoefficients) {
    const std::string why = d == 0 ? "constant after stripping x-powers" : "coefficients already nonnegative";
    if (d >= 2) {
      rep.n_up = {d + k, n_up_label, "", false};
      rep.n_down = {d + k, n_down_label, "", false};
    } else {
      not_applicable(rep.n_up, n_up_label, "BadDegree: recurrence bounds need degree >= 2");
      not_applicable(rep.n_down, n_down_label, "BadDegree: recurrence bounds need degree >= 2");
    }
    for (auto* e : {&rep.lower_angle_power, &rep.upper_structural, &rep.upper_turan, &rep.upper_estim_M,
                    &rep.upper_estim_L, &rep.upper_zaimi}) {
      not_applicable(*e, "", "WrongClass: " + why);
    }
    rep.lower_angle_power.provenance = angle_label;
    rep.upper_structural.provenance = structural_label;
    rep.upper_turan.provenance = turan_label;
    rep.upper_estim_M.provenance = estim_m_label;
    rep.upper_estim_L.provenance = estim_l_label;
    rep.upper_zaimi.provenance = zaimi_label;
    rep.exact_closed_form = {d + k, why, "", false};
    return rep;
  }

  fill(rep.upper_structural, structural_label, k, [&] { return structural_impl(q, policy); });
  const std::size_t cap = rep.upper_structural.value ? *rep.upper_structural.value - k + d : kFallbackCap;
  fill(rep.n_up, n_up_label, k, [&] { return Counted{recurrence(q, cap), true}; });
  fill(rep.n_down, n_down_label, k, [&] { return Counted{recurrence(reverse(q), cap), true}; });
  fill(rep.upper_turan, turan_label, k, [&] { return turan_impl(q, policy); });
  fill(rep.upper_estim_M, estim_m_label, k, [&] { return estim_impl(q, EstimKind::Mahler, policy); });
  fill(rep.upper_estim_L, estim_l_label, k, [&] { return estim_impl(q, EstimKind::MagnitudePower, policy); });
  fill(rep.upper_zaimi, zaimi_label, k, [&] { return zaimi_impl(q, policy); });

  const auto factors = squarefree_decomposition(q);
  const bool quadratic_power = factors.size() == 1 && factors.front().factor.degree() == 2;
  if (quadratic_power) {
    const Polynomial& g = factors.front().factor;
    const unsigned power = factors.front().multiplicity;
    AngleOracle oracle(g, policy);
    const auto lower = oracle.ceil_ratio(power, Conservative::Low);
    rep.lower_angle_power = {to_size(lower.value) + k, angle_label, "", !lower.exact};
    if (power == 1) {
      fill(rep.exact_closed_form, "quadratic closed form ceil(pi / phi)", k, [&] {
        const auto r = exact_quadratic(g, policy);
        return Counted{r.value, true};
      });
    } else {
      const auto single = oracle.ceil_ratio(1, Conservative::High);
      if (lower.exact && single.exact && lower.value == power * single.value) {
        rep.exact_closed_form = {to_size(lower.value) + k, "power of a quadratic with coinciding power bounds", "",
                                 false};
      } else {
        not_applicable(rep.exact_closed_form, "power of a quadratic",
                       "NotApplicable: power bounds do not coincide");
      }
    }
  } else {
    not_applicable(rep.lower_angle_power, angle_label, "NotApplicable: not a power of a quadratic");
    if (d == 3) {
      fill(rep.exact_closed_form, "cubic closed form max(n-up, n-down)", k, [&] {
        const auto r = exact_cubic(q, policy);
        return Counted{r.value, true};
      });
    } else {
      not_applicable(rep.exact_closed_form, "closed form", "NotApplicable: no closed form for degree " +
                                                               std::to_string(d));
    }
  }
  return rep;
}

}  // namespace degplus

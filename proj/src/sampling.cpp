#include "degplus/sampling.hpp"

#include <cmath>
#include <numbers>

#include "degplus/roots.hpp"

namespace degplus {

namespace {

Integer draw(Rng& rng, const Integer& lo, const Integer& hi) {
  // Ranges here are small; long suffices.
  std::uniform_int_distribution<long> dist(lo.get_si(), hi.get_si());
  return dist(rng);
}

}  // namespace

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned den_bound) {
  for (;;) {
    const Integer q = draw(rng, 1, den_bound);
    const Integer first = floor(lo * q) + 1;
    const Integer last = floor(hi * q);
    if (first > last) continue;
    Rational v(draw(rng, first, last), q);
    v.canonicalize();
    return v;
  }
}

Polynomial random_quadratic(Rng& rng, unsigned den_bound) {
  const Rational a = -random_rational(rng, 0, 3, den_bound);
  const Rational quarter = a * a / 4;
  const Rational b = random_rational(rng, quarter, quarter + 3, den_bound);
  return Polynomial({b, a, 1});
}

Polynomial random_cubic(Rng& rng, unsigned den_bound) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    for (;;) {
      const Rational c = random_rational(rng, 0, 3, den_bound);
      const Polynomial p = Polynomial({c, 1}) * random_quadratic(rng, den_bound);
      if (!p.has_nonnegative_coeffs()) return p;
    }
  }
  for (;;) {
    const Polynomial p({random_rational(rng, 0, 4, den_bound), random_rational(rng, -4, 4, den_bound),
                        random_rational(rng, -4, 4, den_bound), 1});
    if (classify(p) == PositivityClass::PositiveOnPositiveAxis) return p;
  }
}

namespace {

// sin(phi - eps) - s sin(eps) - (-1)^(n+1) s^n sin(phi) for w = e^{i phi}, 2 cos(phi) = a.
double criterion_gap(double a, double s) {
  const double phi = std::acos(a / 2);
  const int n = static_cast<int>(std::ceil(std::numbers::pi / phi));
  const double eps = n * phi - std::numbers::pi;
  const double sign = n % 2 == 0 ? -1.0 : 1.0;
  return std::sin(phi - eps) - s * std::sin(eps) - sign * std::pow(s, n) * std::sin(phi);
}

}  // namespace

std::vector<Polynomial> near_criterion_cubics() {
  std::vector<Polynomial> out;
  for (int k = 21; k < 40; ++k) {
    const Rational a(k, 20);
    const double ad = a.get_d();
    constexpr int steps = 1000;
    for (int i = 1; i < steps; ++i) {
      double lo = static_cast<double>(i) / steps;
      double hi = static_cast<double>(i + 1) / steps;
      if (criterion_gap(ad, lo) * criterion_gap(ad, hi) >= 0) continue;
      for (int it = 0; it < 60; ++it) {
        const double mid = (lo + hi) / 2;
        (criterion_gap(ad, lo) * criterion_gap(ad, mid) <= 0 ? hi : lo) = mid;
      }
      Rational s(static_cast<long>(std::lround(lo * 200)), 200);
      s.canonicalize();
      if (s <= 0) continue;
      // Both c = s r and c = r / s give the same ratio; r = 1.
      for (const Rational& c : std::vector<Rational>{s, s * Rational(101, 100), s * Rational(99, 100), 1 / s}) {
        const Polynomial p = Polynomial({c, 1}) * Polynomial({1, -a, 1});
        if (!p.has_nonnegative_coeffs()) out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace degplus

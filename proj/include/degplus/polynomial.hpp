#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degplus/rational.hpp"

namespace degplus {

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending order (index i holds the coefficient of x^i). The zero polynomial
/// is the empty sequence; every other value has a nonzero last entry.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws ZeroPolynomial for the zero polynomial.
  std::size_t degree() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^i; zero beyond the degree.
  const Rational& operator[](std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& at) const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// True when every coefficient is >= 0.
  bool has_nonnegative_coeffs() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial lhs, const Rational& rhs);
Polynomial operator*(const Rational& lhs, Polynomial rhs);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned k);

/// x^d p(1/x) with trailing zeros trimmed; lowers the degree when p(0) = 0.
Polynomial reverse(const Polynomial& p);
/// p(t x); t must be positive.
Polynomial scale(const Polynomial& p, const Rational& t);
Polynomial derivative(const Polynomial& p);
/// p divided by its leading coefficient.
Polynomial monic(const Polynomial& p);

struct XPowerSplit {
  std::size_t power;
  Polynomial rest;
};
/// p = x^power * rest with rest(0) != 0.
XPowerSplit strip_x_power(const Polynomial& p);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& num, const Polynomial& den);
/// True when den divides num exactly.
bool divides(const Polynomial& den, const Polynomial& num);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
bool is_squarefree(const Polynomial& p);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Yun decomposition of a nonconstant p: monic pairwise coprime squarefree
/// factors with multiplicities, p = lc * prod factor^multiplicity.
struct SquarefreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

Rational resultant(const Polynomial& p, const Polynomial& q);
/// (-1)^{d(d-1)/2} Res(p, p') / lc(p).
Rational discriminant(const Polynomial& p);

/// The first order+1 coefficients of a formal power series.
struct TruncatedSeries {
  std::vector<Rational> coeffs;
  std::size_t order = 0;

  Polynomial as_polynomial() const { return Polynomial(coeffs); }
};

/// (1/p)_n, requires p(0) != 0.
TruncatedSeries truncated_inverse(const Polynomial& p, std::size_t n);

/// Canonical text: ascending comma separated rationals, "0" for zero.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);
/// Human readable, descending powers, e.g. "x^2 - x + 3".
std::string to_pretty_string(const Polynomial& p);

/// Clears denominators and divides by the content, keeping the sign of the
/// leading coefficient positive.
Polynomial primitive_integer(const Polynomial& p);

}  // namespace degplus

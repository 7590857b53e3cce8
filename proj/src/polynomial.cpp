#include "degplus/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "degplus/error.hpp"
#include "degplus/matrix.hpp"

namespace degplus {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const Rational& Polynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

bool Polynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator-(const Polynomial& p) { return p * Rational(-1); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.size() + rhs.size() - 1);
  const auto a = lhs.coeffs();
  const auto b = rhs.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial reverse(const Polynomial& p) {
  std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
  std::reverse(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(coeffs));
}

Polynomial scale(const Polynomial& p, const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::NonPositiveScale, "scale factor must be positive, got " + to_string(t));
  std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
  Rational power = 1;
  for (auto& c : coeffs) {
    c *= power;
    power *= t;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Rational> coeffs(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) coeffs[i - 1] = p[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(coeffs));
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

XPowerSplit strip_x_power(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot strip x-powers from zero");
  std::size_t k = 0;
  while (p[k] == 0) ++k;
  std::vector<Rational> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end());
  return {k, Polynomial(std::move(rest))};
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (num.is_zero() || num.degree() < den.degree()) return {{}, num};
  const std::size_t dd = den.degree();
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rational> quot(num.degree() - dd + 1);
  const Rational inv_lead = 1 / den.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational factor = rem[i + dd] * inv_lead;
    quot[i] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= factor * den[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& den, const Polynomial& num) { return divmod(num, den).remainder.is_zero(); }

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_squarefree of zero");
  return gcd(p, derivative(p)).degree() == 0;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() == 0) return Polynomial::constant(1);
  return monic(divmod(p, gcd(p, derivative(p))).quotient);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Polynomial f = monic(p);
  const Polynomial fp = derivative(f);
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(fp, a).quotient;
  Polynomial d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
  const std::size_t m = p.degree();
  const std::size_t n = q.degree();
  const std::size_t size = m + n;
  if (size == 0) return 1;
  Matrix sylvester(size, std::vector<Rational>(size));
  // Rows hold coefficients in descending order, shifted.
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) sylvester[row][row + k] = p[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + row][row + k] = q[n - k];
  }
  return determinant(std::move(sylvester));
}

Rational discriminant(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) throw Error(ErrorCode::DegreeTooLow, "discriminant needs degree >= 2");
  const std::size_t d = p.degree();
  Rational res = resultant(p, derivative(p)) / p.leading();
  if ((d * (d - 1) / 2) % 2 == 1) res = -res;
  return res;
}

TruncatedSeries truncated_inverse(const Polynomial& p, std::size_t n) {
  if (p.is_zero() || p[0] == 0) {
    throw Error(ErrorCode::ZeroConstantTerm, "formal inverse needs a nonzero constant term");
  }
  TruncatedSeries series;
  series.order = n;
  series.coeffs.resize(n + 1);
  const Rational inv0 = 1 / p[0];
  series.coeffs[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    const std::size_t top = std::min(k, p.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc += p[i] * series.coeffs[k - i];
    series.coeffs[k] = -acc * inv0;
  }
  return series;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(p[i]);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

std::string to_pretty_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) {
      if (mag.get_den() != 1 && i > 0) {
        out << "(" << to_string(mag) << ")";
      } else {
        out << to_string(mag);
      }
    }
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (p.leading() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

}  // namespace degplus

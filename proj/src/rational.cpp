#include "degplus/rational.hpp"

#include <cctype>

#include "degplus/error.hpp"

namespace degplus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NoNonzeroRoots: return "NoNonzeroRoots";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::AngleTooLarge: return "AngleTooLarge";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorCode::InfiniteDegPlus: return "InfiniteDegPlus";
    case ErrorCode::PositiveRootPresent: return "PositiveRootPresent";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "decimal input '" + std::string(original) +
                                           "' is not accepted; write it as a fraction, e.g. 3/2");
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(original) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(original) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) { return sgn(q); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace degplus

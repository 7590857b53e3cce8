#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degplus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n", "n/d" or "-n/d". Decimal and exponent forms are rejected
/// with a hint, since a silent float conversion would perturb boundary cases.
Rational parse_rational(std::string_view text);

/// Canonical form: "n" for integers, "n/d" otherwise (lowest terms, d > 0).
std::string to_string(const Rational& q);

int sign(const Rational& q);

/// Exact integer ceiling and floor.
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

}  // namespace degplus

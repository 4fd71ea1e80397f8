#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace markovl2 {

using Int = mpz_class;
using Rational = mpq_class;  // gmpxx keeps values canonical: lowest terms, positive denominator

std::string to_string(const Int& z);
std::string to_string(const Rational& q);  // "p/q", or just "p" when the denominator is 1

// Accepts "p/q", plain integers, and decimal literals like "-0.25" or "1e3".
Rational parse_rational(std::string_view s);

Rational rational_pow(const Rational& base, unsigned e);
Int floor_rational(const Rational& q);

// C(a + n, n) = prod_{j=1..n} (a + j)/j for rational a
Rational binom_shifted(const Rational& a, unsigned n);

}  // namespace markovl2

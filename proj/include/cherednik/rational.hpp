#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cherednik {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);
/// Euler totient.
int totient(int n);

/// Fractional part in [0,1).
Rational frac(const Rational& value);
/// floor as Integer.
Integer floor_rational(const Rational& value);

}  // namespace cherednik

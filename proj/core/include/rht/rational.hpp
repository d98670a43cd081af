#pragma once

#include <gmpxx.h>

#include <string>

namespace rht {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized; every constructor below does so.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b" with an optional leading sign. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// "3", "-1/2".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace rht

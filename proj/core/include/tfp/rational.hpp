#pragma once

#include <gmpxx.h>

#include <string>

namespace tfp {

// Exact arithmetic everywhere; no floating point in any computation path.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (d > 0 after normalization). Throws ParseError on
/// malformed input or a zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical form: "n" for integers, "n/d" otherwise, '-' bound to the numerator.
std::string rational_to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace tfp

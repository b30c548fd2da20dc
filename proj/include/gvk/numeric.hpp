#pragma once

#include <gmpxx.h>

#include <string>

namespace gvk {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Exact rational, kept in canonical (reduced) form.
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

/// Parses "p" or "p/q". The input must already be in canonical reduced
/// form (no leading '+', no "-0", q > 1, gcd(p,q) = 1); anything else
/// throws ParseError.
Rat rat_from_string(const std::string& s);

/// Strict integer literal (optional leading '-', digits, no "-0").
Int int_from_string(const std::string& s);

/// base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned long exp);

/// base^exp as an exact rational; exp may be negative (base must be nonzero).
Rat rat_pow(const Int& base, long exp);

/// Generalized binomial coefficient C(top, k) = top(top-1)...(top-k+1)/k!,
/// defined for any integer top and k >= 0. Always an integer.
Int binomial(const Int& top, unsigned long k);

/// floor(a/b) for rationals, b != 0.
Int floor_div(const Rat& a, const Rat& b);

}  // namespace gvk

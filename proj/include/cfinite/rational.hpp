#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cfinite {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; construction from raw parts must call canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Also accepts
// the Unicode minus sign.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool all_integers(const RationalVec& v);

// Least common multiple of the denominators.
Integer common_denominator(const RationalVec& v);

// Nonnegative gcd of the numerators (0 for an all-zero vector).
Integer numerator_gcd(const RationalVec& v);

// Lexicographic comparison, shorter vector first on a common prefix.
int compare(const RationalVec& a, const RationalVec& b);

// Replaces U+2212 by '-' so literals copied from typeset text parse.
std::string ascii_minus(std::string_view text);

}  // namespace cfinite

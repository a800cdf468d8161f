#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace keypoly {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" (optionally signed); result is in lowest terms with
// positive denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// max(|numerator|, denominator) of the reduced form; height(0) = 1.
Integer rational_height(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Multiplicity of the prime p in n; n must be nonzero.
long padic_order(const Integer& n, const Integer& p);

}  // namespace keypoly

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace htp {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form we
// rely on everywhere: denominator > 0 and gcd(num, den) = 1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", optional leading sign, arbitrary precision.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

Integer factorial(int n);
Integer double_factorial_odd(int n);  // (2n-1)!! with (−1)!! = 1
Integer binomial(int n, int k);

int rational_sign(const Rational& r);

}  // namespace htp

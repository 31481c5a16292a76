#pragma once

#include <boost/rational.hpp>

namespace abelgraph {

// Exact rational arithmetic for the inequality bounds. Numerators and
// denominators stay tiny (denominators divide 2g-2 and 2), so 64-bit
// components are ample.
using Rational = boost::rational<long long>;

inline long long rational_floor(const Rational& q) {
    long long n = q.numerator(), d = q.denominator();  // d > 0 by normalization
    long long t = n / d;
    return (n % d != 0 && n < 0) ? t - 1 : t;
}

inline long long rational_ceil(const Rational& q) {
    long long n = q.numerator(), d = q.denominator();
    long long t = n / d;
    return (n % d != 0 && n > 0) ? t + 1 : t;
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

}  // namespace abelgraph

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace glab {

// Exact arbitrary-precision integer and reduced rational.
// cpp_rational keeps gcd(|num|, den) = 1 with den > 0 and zero as 0/1,
// which is exactly the canonical form the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

/// Number of bits in |n|; bit_length(0) = 0.
inline long long bit_length(const Integer& n) {
    if (n == 0) return 0;
    Integer a = n < 0 ? Integer(-n) : n;
    return static_cast<long long>(boost::multiprecision::msb(a)) + 1;
}

/// floor(log2 n) for n >= 1, computed without floating point.
inline long long floor_log2(const Integer& n) {
    if (n < 1) throw std::domain_error("floor_log2: n must be >= 1");
    return bit_length(n) - 1;
}

/// Binomial coefficient C(n, k); 0 outside the triangle.
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// "num/den", or plain "num" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace glab

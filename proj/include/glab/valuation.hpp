#pragma once

#include <stdexcept>
#include <utility>

#include "glab/numbers.hpp"

namespace glab {

namespace detail {

// Deterministic Miller-Rabin, valid for all inputs below 2^64.
inline bool miller_rabin_u64(const Integer& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/// A validated prime. Construction runs a deterministic primality test;
/// values of 2^64 and above are rejected.
class Prime {
public:
    explicit Prime(Integer value) : value_(std::move(value)) {
        if (value_ < 2) throw std::domain_error("Prime: value must be >= 2");
        if (bit_length(value_) > 64)
            throw std::domain_error("Prime: values >= 2^64 are not supported");
        if (!detail::miller_rabin_u64(value_))
            throw std::domain_error("Prime: " + value_.str() + " is not prime");
    }

    const Integer& value() const { return value_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

private:
    Integer value_;
};

/// Sum of the base-p digits of n; s_p(0) = 0.
inline Integer digit_sum(const Integer& n, const Prime& p) {
    if (n < 0) throw std::domain_error("digit_sum: n must be >= 0");
    Integer s = 0;
    Integer m = n;
    while (m > 0) {
        s += m % p.value();
        m /= p.value();
    }
    return s;
}

/// p-adic valuation of a nonzero integer (sign ignored).
inline Integer vp_int(const Integer& n, const Prime& p) {
    if (n == 0) throw std::domain_error("vp_int: valuation of 0 is undefined");
    Integer m = n < 0 ? Integer(-n) : n;
    Integer e = 0;
    while (m % p.value() == 0) {
        m /= p.value();
        ++e;
    }
    return e;
}

/// p-adic valuation extended to nonzero rationals; may be negative.
inline Integer vp_rat(const Rational& q, const Prime& p) {
    if (q == 0) throw std::domain_error("vp_rat: valuation of 0 is undefined");
    return vp_int(numerator(q), p) - vp_int(denominator(q), p);
}

/// Valuation of n! as (n - s_p(n)) / (p - 1).
inline Integer legendre_valuation(const Integer& n, const Prime& p) {
    if (n < 1) throw std::domain_error("legendre_valuation: n must be >= 1");
    Integer diff = n - digit_sum(n, p);
    return diff / (p.value() - 1);  // exact by construction of digit sums
}

/// lcm(1, 2, ..., m).
inline Integer lcm_range(long long m) {
    if (m < 1) throw std::domain_error("lcm_range: m must be >= 1");
    Integer l = 1;
    for (long long i = 2; i <= m; ++i) l = boost::multiprecision::lcm(l, Integer(i));
    return l;
}

/// lcm of the binomial row C(m,0), ..., C(m,m), by folding the row directly.
/// The companion quantity lcm_range(m+1) / (m+1) must be an exact division;
/// equality of the two routes is checked by the identity verifier.
inline Integer lcm_binomial_row(long long m) {
    if (m < 0) throw std::domain_error("lcm_binomial_row: m must be >= 0");
    Integer l = 1;
    Integer c = 1;
    for (long long k = 1; k <= m; ++k) {
        c *= m - k + 1;
        c /= k;
        l = boost::multiprecision::lcm(l, c);
    }
    if (lcm_range(m + 1) % (m + 1) != 0)
        throw std::logic_error("lcm_binomial_row: lcm(1..m+1) not divisible by m+1");
    return l;
}

}  // namespace glab

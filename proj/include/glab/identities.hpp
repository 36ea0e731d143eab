#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/numbers.hpp"
#include "glab/report.hpp"
#include "glab/sequences.hpp"
#include "glab/stirling.hpp"
#include "glab/valuation.hpp"

namespace glab {

/// Rockett's identity: sum_k 1/C(n,k) = ((n+1)/2^{n+1}) sum_{k=1}^{n+1} 2^k/k.
inline VerificationReport verify_rockett(long long n_max) {
    if (n_max < 0) throw std::domain_error("verify_rockett: n_max must be >= 0");
    VerificationReport rep;
    rep.identity = "rockett";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    Prime two(2);
    for (long long n = 0; n <= n_max; ++n) {
        Rational lhs = 0;
        for (long long k = 0; k <= n; ++k) lhs += Rational(1, binomial(n, k));
        Rational rhs = Rational(Integer(n + 1), Integer(1) << (n + 1)) *
                       power_over_k_sum(n + 1, two);
        VerificationRecord rec;
        rec.n = n;
        rec.lhs = to_string(lhs);
        rec.rhs = to_string(rhs);
        rec.pass = lhs == rhs;
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// a_n = (-1)^{n-1} sum_k G_k s(n,k).
inline VerificationReport verify_corollary_eqq5(long long n_max) {
    if (n_max < 0) throw std::domain_error("verify_corollary_eqq5: n_max must be >= 0");
    VerificationReport rep;
    rep.identity = "eqq5";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    for (long long n = 0; n <= n_max; ++n) {
        Integer sum = 0;
        for (long long k = 0; k <= n; ++k)
            sum += genocchi(k, GenocchiRoute::stirling_identity) * stirling_first(n, k);
        Integer rhs = n % 2 == 1 ? sum : -sum;  // (-1)^{n-1} sum
        Integer lhs = a_direct(n);
        VerificationRecord rec;
        rec.n = n;
        rec.lhs = to_string(lhs);
        rec.rhs = to_string(rhs);
        rec.pass = lhs == rhs;
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// Three-way agreement of the Genocchi routes.
inline VerificationReport verify_theorem1(long long n_max) {
    if (n_max < 0) throw std::domain_error("verify_theorem1: n_max must be >= 0");
    VerificationReport rep;
    rep.identity = "theorem1";
    rep.range_lo = 0;
    rep.range_hi = n_max;
    for (long long n = 0; n <= n_max; ++n) {
        Integer g1 = genocchi(n, GenocchiRoute::stirling_identity);
        Integer g2 = genocchi(n, GenocchiRoute::bernoulli_scaling);
        Integer g3 = genocchi(n, GenocchiRoute::seidel);
        VerificationRecord rec;
        rec.n = n;
        rec.lhs = to_string(g1);
        rec.rhs = to_string(g2) + "|" + to_string(g3);
        rec.pass = g1 == g2 && g2 == g3;
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// Stirling inversion round trip: u_n = sum v_k s(n,k), then
/// v'_n = sum u_k S(n,k) recovers v, and the same with the roles swapped.
inline VerificationReport verify_inversion(const std::vector<Integer>& pairs, long long n_max) {
    if (n_max < 0) throw std::domain_error("verify_inversion: n_max must be >= 0");
    if (static_cast<long long>(pairs.size()) < n_max + 1)
        throw std::domain_error("verify_inversion: need v_0..v_{n_max}");
    VerificationReport rep;
    rep.identity = "inversion";
    rep.range_lo = 0;
    rep.range_hi = n_max;

    std::vector<Integer> u(n_max + 1), back(n_max + 1);
    std::vector<Integer> w(n_max + 1), back2(n_max + 1);
    for (long long n = 0; n <= n_max; ++n) {
        for (long long k = 0; k <= n; ++k) {
            u[n] += pairs[k] * stirling_first(n, k);
            w[n] += pairs[k] * stirling_second(n, k);
        }
    }
    for (long long n = 0; n <= n_max; ++n) {
        for (long long k = 0; k <= n; ++k) {
            back[n] += u[k] * stirling_second(n, k);
            back2[n] += w[k] * stirling_first(n, k);
        }
    }
    for (long long n = 0; n <= n_max; ++n) {
        VerificationRecord rec;
        rec.n = n;
        rec.lhs = to_string(back[n]) + "|" + to_string(back2[n]);
        rec.rhs = to_string(pairs[n]);
        rec.pass = back[n] == pairs[n] && back2[n] == pairs[n];
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// Lower bounds on the 2-adic valuation of sum_{k<=n} 2^k/k:
/// bound1 = s_2(n), bound2 = n - floor(log2 n).
inline VerificationReport verify_theorem2(long long n_max) {
    if (n_max < 1) throw std::domain_error("verify_theorem2: n_max must be >= 1");
    VerificationReport rep;
    rep.identity = "theorem2";
    rep.range_lo = 1;
    rep.range_hi = n_max;
    Prime two(2);
    Rational sum = 0;
    Integer pk = 1;
    for (long long n = 1; n <= n_max; ++n) {
        pk *= 2;
        sum += Rational(pk, Integer(n));
        VerificationRecord rec;
        rec.n = n;
        if (sum == 0) {
            rec.lhs = "undefined";
            rec.rhs = "";
            rec.note = "valuation-undefined";
            rec.pass = false;
        } else {
            Integer v = vp_rat(sum, two);
            Integer b1 = digit_sum(Integer(n), two);
            Integer b2 = Integer(n) - floor_log2(Integer(n));
            rec.lhs = to_string(v);
            rec.rhs = "bounds";
            rec.bound1 = b1;
            rec.bound2 = b2;
            rec.slack = v - (b1 > b2 ? b1 : b2);
            rec.pass = v >= b1 && v >= b2;
        }
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// lcm of binomial row m times (m+1) equals lcm(1..m+1).
inline VerificationReport verify_lcm_identity(long long m_max) {
    if (m_max < 0) throw std::domain_error("verify_lcm_identity: m_max must be >= 0");
    VerificationReport rep;
    rep.identity = "lcm";
    rep.range_lo = 0;
    rep.range_hi = m_max;
    for (long long m = 0; m <= m_max; ++m) {
        Integer lhs = lcm_binomial_row(m) * (m + 1);
        Integer rhs = lcm_range(m + 1);
        VerificationRecord rec;
        rec.n = m;
        rec.lhs = to_string(lhs);
        rec.rhs = to_string(rhs);
        rec.pass = lhs == rhs;
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

/// One entry of the Open Problem 1 scan: the bound vp(sum p^k/k) >= s_p(n)
/// fails at n, or the valuation is undefined because the sum is zero.
struct Open1Record {
    long long n = 0;
    std::optional<Integer> valuation;  // empty when the sum is zero
    Integer digit_sum;
    bool undefined = false;
};

/// Every n <= n_max where the p-adic analogue of the theorem-2 bound fails.
inline std::vector<Open1Record> search_open1(const Prime& p, long long n_max) {
    if (p.value() == 2) throw std::domain_error("search_open1: p must be an odd prime");
    if (n_max < 1) throw std::domain_error("search_open1: n_max must be >= 1");
    std::vector<Open1Record> out;
    Rational sum = 0;
    Integer pk = 1;
    for (long long n = 1; n <= n_max; ++n) {
        pk *= p.value();
        sum += Rational(pk, Integer(n));
        Integer sp = digit_sum(Integer(n), p);
        if (sum == 0) {
            Open1Record rec;
            rec.n = n;
            rec.digit_sum = sp;
            rec.undefined = true;
            out.push_back(std::move(rec));
            continue;
        }
        Integer v = vp_rat(sum, p);
        if (v < sp) {
            Open1Record rec;
            rec.n = n;
            rec.valuation = v;
            rec.digit_sum = sp;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace glab

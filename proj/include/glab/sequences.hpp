#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "glab/numbers.hpp"
#include "glab/series.hpp"
#include "glab/stirling.hpp"
#include "glab/valuation.hpp"

namespace glab {

namespace detail {

// Monotone-growth cache of a prefix sequence. Fill is idempotent; growth is
// serialized, completed entries are immutable.
template <typename T>
class PrefixCache {
public:
    explicit PrefixCache(T seed) { values_.push_back(std::move(seed)); }

    template <typename Step>
    T get(long long n, Step step) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long long>(values_.size()) <= n) {
            long long k = static_cast<long long>(values_.size());
            values_.push_back(step(k, values_));
        }
        return values_[n];
    }

    std::vector<T> snapshot() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return values_;
    }

    void seed(const std::vector<T>& values) {
        if (values.empty() || values[0] != values_[0]) return;
        std::lock_guard<std::mutex> lock(mutex_);
        if (values.size() > values_.size()) values_ = values;
    }

private:
    std::vector<T> values_;
    mutable std::mutex mutex_;
};

inline PrefixCache<Integer>& factorial_cache() {
    static PrefixCache<Integer> cache{Integer(1)};
    return cache;
}

}  // namespace detail

/// n!, cached per process.
inline Integer factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    return detail::factorial_cache().get(
        n, [](long long k, const std::vector<Integer>& v) { return Integer(k * v[k - 1]); });
}

/// a_n as the defining sum of factorial products; a_0 = 0.
inline Integer a_direct(long long n) {
    if (n < 0) throw std::domain_error("a_direct: n must be >= 0");
    Integer s = 0;
    for (long long k = 0; k < n; ++k) s += factorial(k) * factorial(n - k - 1);
    return s;
}

/// a_n via a_k = (k a_{k-1})/2 + (k-1)!; the halving is exact at every step.
inline Integer a_recurrence(long long n) {
    if (n < 0) throw std::domain_error("a_recurrence: n must be >= 0");
    Integer a = 0;
    for (long long k = 1; k <= n; ++k) {
        Integer t = k * a;
        if ((t & 1) != 0)
            throw std::logic_error("a_recurrence: k*a_{k-1} is odd at k=" + std::to_string(k));
        a = t / 2 + factorial(k - 1);
    }
    return a;
}

/// Exact reduced sum p^1/1 + p^2/2 + ... + p^n/n.
inline Rational power_over_k_sum(long long n, const Prime& p) {
    if (n < 1) throw std::domain_error("power_over_k_sum: n must be >= 1");
    Rational s = 0;
    Integer pk = 1;
    for (long long k = 1; k <= n; ++k) {
        pk *= p.value();
        s += Rational(pk, Integer(k));
    }
    return s;
}

/// a_n as (n!/2^n) * sum 2^k/k; the rational result must reduce to an integer.
inline Integer a_rockett(long long n) {
    if (n < 0) throw std::domain_error("a_rockett: n must be >= 0");
    if (n == 0) return 0;
    Rational s = power_over_k_sum(n, Prime(2));
    Rational r = Rational(factorial(n), Integer(1) << n) * s;
    if (denominator(r) != 1)
        throw std::logic_error("a_rockett: non-integer value at n=" + std::to_string(n));
    return numerator(r);
}

namespace detail {

inline PrefixCache<Rational>& bernoulli_cache() {
    static PrefixCache<Rational> cache{Rational(1)};
    return cache;
}

}  // namespace detail

/// Bernoulli number B_n for x/(e^x - 1), so B_1 = -1/2. Computed by the
/// recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline Rational bernoulli(long long n) {
    if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
    return detail::bernoulli_cache().get(n, [](long long m, const std::vector<Rational>& v) {
        Rational acc = 0;
        for (long long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * v[k];
        return Rational(-acc / Rational(m + 1));
    });
}

enum class GenocchiRoute { stirling_identity, bernoulli_scaling, seidel };

namespace detail {

// Seidel's boustrophedon triangle; the last entry of odd row 2n-1 is
// |G_{2n}|. Cached as the list of rows built so far.
inline PrefixCache<std::vector<Integer>>& seidel_cache() {
    static PrefixCache<std::vector<Integer>> cache{std::vector<Integer>{Integer(1)}};
    return cache;
}

// Rows are 1-indexed in the classical description; row index i here is 0-based
// (row 0 = {1}). Even 0-based rows extend left-to-right, odd ones right-to-left.
inline std::vector<Integer> seidel_row(long long i) {
    return seidel_cache().get(i, [](long long r, const std::vector<std::vector<Integer>>& rows) {
        const auto& prev = rows[r - 1];
        std::size_t len = r / 2 + 1;
        std::vector<Integer> row(len);
        auto prev_at = [&](std::size_t j) { return j < prev.size() ? prev[j] : Integer(0); };
        if (r % 2 == 0) {
            // left to right: row[0] copies, row[j] = row[j-1] + prev[j]
            row[0] = prev[0];
            for (std::size_t j = 1; j < len; ++j) row[j] = row[j - 1] + prev_at(j);
        } else {
            // right to left: row[len-1] copies, row[j] = row[j+1] + prev[j]
            row[len - 1] = prev[len - 1];
            for (std::size_t j = len - 1; j-- > 0;) row[j] = row[j + 1] + prev_at(j);
        }
        return row;
    });
}

inline PrefixCache<Integer>& genocchi_seidel_cache() {
    static PrefixCache<Integer> cache{Integer(0)};
    return cache;
}

}  // namespace detail

/// Genocchi number G_n by the named route. All routes are exact and agree.
///
/// stirling-identity: the double sum over (l-1)!(k-l)! S(n,k), integer by
/// construction. bernoulli-scaling: 2(1-2^n) B_n, with the reduced
/// denominator asserted to be 1. seidel: even indices from Seidel's
/// boustrophedon triangle with sign (-1)^{n/2}; odd indices n = 2m-1 >= 3
/// solved out of the binomial relation sum_k C(m,k) G_{m+k} = 0, whose
/// G_{2m-1} coefficient is m (the division must be exact).
inline Integer genocchi(long long n, GenocchiRoute route) {
    if (n < 0) throw std::domain_error("genocchi: n must be >= 0");
    switch (route) {
        case GenocchiRoute::stirling_identity: {
            Integer g = 0;
            for (long long k = 1; k <= n; ++k) {
                Integer inner = 0;
                for (long long l = 1; l <= k; ++l) inner += factorial(l - 1) * factorial(k - l);
                Integer term = inner * stirling_second(n, k);
                g += (k % 2 == 1) ? term : -term;
            }
            return g;
        }
        case GenocchiRoute::bernoulli_scaling: {
            Rational r = Rational(2 * (1 - (Integer(1) << n))) * bernoulli(n);
            if (denominator(r) != 1)
                throw std::logic_error("genocchi: 2(1-2^n)B_n not an integer at n=" +
                                       std::to_string(n));
            return numerator(r);
        }
        case GenocchiRoute::seidel:
            return detail::genocchi_seidel_cache().get(
                n, [](long long m, const std::vector<Integer>& g) {
                    if (m == 1) return Integer(1);
                    if (m % 2 == 0) {
                        Integer mag = detail::seidel_row(m - 2).back();
                        return m % 4 == 0 ? mag : Integer(-mag);
                    }
                    // m = 2h-1: relation sum_{k=0}^{h} C(h,k) G_{h+k} = 0,
                    // all terms except k = h-1 already known
                    long long h = (m + 1) / 2;
                    Integer top = detail::seidel_row(2 * h - 2).back();
                    if (h % 2 == 1) top = -top;  // G_{2h}
                    Integer acc = top;
                    for (long long k = 0; k <= h - 2; ++k) acc += binomial(h, k) * g[h + k];
                    if (acc % h != 0)
                        throw std::logic_error(
                            "genocchi: Seidel relation not divisible at n=" + std::to_string(m));
                    return Integer(-acc / h);
                });
    }
    throw std::domain_error("genocchi: unknown route");
}

// ---- EGF oracles -----------------------------------------------------------

/// EGF of a_n: -2 log(1-x) / (2-x), as numerator times a unit-series inverse.
inline SeriesPoly a_egf(long long order) {
    SeriesPoly num = Rational(-2) * log1m_series(order);
    SeriesPoly den(order);
    den.coeff(0) = 2;
    if (order > 1) den.coeff(1) = -1;
    return num * den.reciprocal();
}

/// EGF of B_n: x/(e^x - 1), via the unit series (e^x - 1)/x.
inline SeriesPoly bernoulli_egf(long long order) {
    SeriesPoly unit(order);
    for (long long k = 0; k < order; ++k) unit.coeff(k) = Rational(1, factorial(k + 1));
    return unit.reciprocal();
}

/// EGF of G_n: 2x/(e^x + 1), as x times the inverse of (e^x + 1)/2.
inline SeriesPoly genocchi_egf(long long order) {
    SeriesPoly unit(order);
    unit.coeff(0) = 1;
    for (long long k = 1; k < order; ++k) unit.coeff(k) = Rational(1, 2 * factorial(k));
    SeriesPoly inv = unit.reciprocal();
    SeriesPoly x(order);
    if (order > 1) x.coeff(1) = 1;
    return x * inv;
}

/// log^k(1 +- x) / k!; with minus_x the coefficient of x^n/n! is (-1)^n s(n,k),
/// without it the coefficient is s(n,k).
inline SeriesPoly log_power(long long k, long long order, bool minus_x = false) {
    if (k < 0) throw std::domain_error("log_power: k must be >= 0");
    SeriesPoly base = minus_x ? log1m_series(order) : log1p_series(order);
    SeriesPoly result(order);
    result.coeff(0) = 1;
    for (long long i = 0; i < k; ++i) result = result * base;
    return Rational(1, factorial(k)) * result;
}

}  // namespace glab

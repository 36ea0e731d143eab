#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "glab/numbers.hpp"

namespace glab {

/// Truncated power series with exact rational coefficients. coeffs[i] is the
/// coefficient of x^i; all arithmetic truncates at `order` (exclusive bound).
class SeriesPoly {
public:
    explicit SeriesPoly(long long order) : coeffs_(check_order(order)) {}

    SeriesPoly(std::vector<Rational> coeffs, long long order)
        : coeffs_(std::move(coeffs)) {
        check_order(order);
        coeffs_.resize(static_cast<std::size_t>(order));
    }

    long long order() const { return static_cast<long long>(coeffs_.size()); }

    const Rational& coeff(long long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    Rational& coeff(long long i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r(common_order(a, b));
        for (long long i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r(common_order(a, b));
        for (long long i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend SeriesPoly operator-(const SeriesPoly& a) {
        SeriesPoly r(a.order());
        for (long long i = 0; i < r.order(); ++i) r.coeffs_[i] = -a.coeffs_[i];
        return r;
    }

    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r(common_order(a, b));
        for (long long i = 0; i < r.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (long long j = 0; i + j < r.order(); ++j)
                if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend SeriesPoly operator*(const Rational& c, const SeriesPoly& a) {
        SeriesPoly r(a.order());
        for (long long i = 0; i < r.order(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
        return r;
    }

    /// Multiplicative inverse of a unit series (nonzero constant term).
    SeriesPoly reciprocal() const {
        if (coeffs_.empty() || coeffs_[0] == 0)
            throw std::domain_error("SeriesPoly::reciprocal: constant term must be nonzero");
        SeriesPoly r(order());
        Rational inv0 = Rational(1) / coeffs_[0];
        r.coeffs_[0] = inv0;
        for (long long n = 1; n < order(); ++n) {
            Rational acc = 0;
            for (long long k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = -inv0 * acc;
        }
        return r;
    }

    /// Composition this(inner); inner must have zero constant term.
    SeriesPoly compose(const SeriesPoly& inner) const {
        if (inner.order() > 0 && inner.coeffs_[0] != 0)
            throw std::domain_error("SeriesPoly::compose: inner constant term must be zero");
        long long ord = common_order(*this, inner);
        SeriesPoly result(ord);
        SeriesPoly power(ord);  // inner^k, starting at k = 0
        if (ord > 0) power.coeffs_[0] = 1;
        for (long long k = 0; k < ord; ++k) {
            if (coeffs_[k] != 0) result = result + coeffs_[k] * power;
            power = power * inner;
        }
        return result;
    }

private:
    static long long check_order(long long order) {
        if (order < 1) throw std::domain_error("SeriesPoly: order must be >= 1");
        return order;
    }

    static long long common_order(const SeriesPoly& a, const SeriesPoly& b) {
        if (a.order() != b.order())
            throw std::domain_error("SeriesPoly: mixed truncation orders");
        return a.order();
    }

    std::vector<Rational> coeffs_;
};

/// log(1+x) truncated at `order`.
inline SeriesPoly log1p_series(long long order) {
    SeriesPoly s(order);
    for (long long n = 1; n < order; ++n)
        s.coeff(n) = Rational(n % 2 == 1 ? 1 : -1, n);
    return s;
}

/// log(1-x) truncated at `order`.
inline SeriesPoly log1m_series(long long order) {
    SeriesPoly s(order);
    for (long long n = 1; n < order; ++n) s.coeff(n) = Rational(-1, n);
    return s;
}

}  // namespace glab

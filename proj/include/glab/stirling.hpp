#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "glab/numbers.hpp"
#include "glab/report.hpp"

namespace glab {

enum class StirlingKind { first_signed, second };

/// Triangular memo of one Stirling kind. Rows grow whole-row and are never
/// rewritten; growth is serialized internally, reads of completed rows are
/// safe to share.
class StirlingTable {
public:
    explicit StirlingTable(StirlingKind kind) : kind_(kind) { rows_.push_back({Integer(1)}); }

    StirlingKind kind() const { return kind_; }

    long long max_row() const { return static_cast<long long>(rows_.size()) - 1; }

    /// Materializes rows 0..n if needed.
    void ensure_rows(long long n) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long long>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            long long m = static_cast<long long>(rows_.size()) - 1;  // prev is row m
            std::vector<Integer> row(m + 2);
            row[0] = 0;
            for (long long k = 1; k <= m + 1; ++k) {
                Integer above = k <= m ? prev[k] : Integer(0);
                if (kind_ == StirlingKind::first_signed)
                    row[k] = prev[k - 1] - m * above;  // s(m+1,k) = s(m,k-1) - m s(m,k)
                else
                    row[k] = prev[k - 1] + k * above;  // S(m+1,k) = S(m,k-1) + k S(m,k)
            }
            rows_.push_back(std::move(row));
        }
    }

    Integer at(long long n, long long k) {
        if (n < 0 || k < 0 || k > n)
            throw std::domain_error("StirlingTable: need 0 <= k <= n");
        ensure_rows(n);
        return rows_[n][k];
    }

    std::vector<Integer> row(long long n) {
        if (n < 0) throw std::domain_error("StirlingTable: row index must be >= 0");
        ensure_rows(n);
        return rows_[n];
    }

    /// Copy of all materialized rows (for cache persistence).
    std::vector<std::vector<Integer>> snapshot() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return rows_;
    }

    /// Adopts previously materialized rows; ignored unless it extends the
    /// table and carries a plausible shape.
    void seed(const std::vector<std::vector<Integer>>& rows) {
        if (rows.empty() || rows[0] != std::vector<Integer>{Integer(1)}) return;
        for (std::size_t n = 0; n < rows.size(); ++n)
            if (rows[n].size() != n + 1 || rows[n][n] != 1) return;
        std::lock_guard<std::mutex> lock(mutex_);
        if (rows.size() > rows_.size()) rows_ = rows;
    }

private:
    StirlingKind kind_;
    std::vector<std::vector<Integer>> rows_;
    mutable std::mutex mutex_;
};

inline StirlingTable& stirling_table(StirlingKind kind) {
    static StirlingTable first(StirlingKind::first_signed);
    static StirlingTable second(StirlingKind::second);
    return kind == StirlingKind::first_signed ? first : second;
}

/// Signed Stirling number of the first kind s(n,k).
inline Integer stirling_first(long long n, long long k) {
    return stirling_table(StirlingKind::first_signed).at(n, k);
}

/// Stirling number of the second kind S(n,k).
inline Integer stirling_second(long long n, long long k) {
    return stirling_table(StirlingKind::second).at(n, k);
}

/// Coefficients of X^0..X^n in X(X-1)...(X-n+1), by direct polynomial
/// multiplication. Entry k equals s(n,k); serves as the oracle for the
/// recurrence-built table.
inline std::vector<Integer> falling_factorial_coeffs(long long n) {
    if (n < 0) throw std::domain_error("falling_factorial_coeffs: n must be >= 0");
    std::vector<Integer> poly{Integer(1)};
    for (long long i = 0; i < n; ++i) {
        // multiply by (X - i)
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= i * poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

/// Checks both orthogonality sums sum_i s(n,i)S(i,k) = delta_nk and the
/// swapped form for all 0 <= k <= n <= N.
inline VerificationReport check_orthogonality(long long N) {
    if (N < 0) throw std::domain_error("check_orthogonality: N must be >= 0");
    auto& first = stirling_table(StirlingKind::first_signed);
    auto& second = stirling_table(StirlingKind::second);
    first.ensure_rows(N);
    second.ensure_rows(N);

    VerificationReport rep;
    rep.identity = "orthogonality";
    rep.range_lo = 0;
    rep.range_hi = N;
    for (long long n = 0; n <= N; ++n) {
        std::string failing;
        for (long long k = 0; k <= n; ++k) {
            Integer sum_a = 0, sum_b = 0;
            for (long long i = k; i <= n; ++i) {
                sum_a += first.at(n, i) * second.at(i, k);
                sum_b += second.at(n, i) * first.at(i, k);
            }
            Integer delta = n == k ? 1 : 0;
            if (sum_a != delta || sum_b != delta) {
                if (!failing.empty()) failing += ' ';
                failing += "k=" + std::to_string(k);
            }
        }
        VerificationRecord rec;
        rec.n = n;
        rec.lhs = failing.empty() ? "delta" : failing;
        rec.rhs = "delta";
        rec.note = "pairs=" + std::to_string(n + 1);  // per direction at this n
        rec.pass = failing.empty();
        rep.records.push_back(std::move(rec));
    }
    rep.finalize();
    return rep;
}

}  // namespace glab

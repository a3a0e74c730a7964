#pragma once

/// @file qseries.hpp
/// Truncated formal power series in q with exact integer coefficients.
///
/// A QSeries retains the coefficients of q^0 .. q^order inclusive. All
/// arithmetic is exact; mixed-order operations truncate to the smaller
/// order, which is the only range on which both operands are known.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3count/bigint.hpp"

namespace k3count {

/// Thrown when inverting (or raising to a negative power) a series whose
/// constant term is not +1 or -1: those are the only units of Z[[q]].
struct NonUnitConstantTerm : std::domain_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by a negative shift when the series is not divisible by the
/// requested power of q.
struct InexactPowerDivision : std::domain_error {
    explicit InexactPowerDivision(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when asking for a coefficient beyond the truncation order.
struct OrderExceeded : std::out_of_range {
    explicit OrderExceeded(const std::string& what) : std::out_of_range(what) {}
};

class QSeries {
public:
    /// The zero series truncated at `order`.
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Series with the given low-order coefficients, truncated at `order`.
    /// Missing high-degree coefficients are zero-filled, extra ones dropped.
    QSeries(std::vector<BigInt> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    QSeries(std::initializer_list<long long> coeffs, std::size_t order) : coeffs_(order + 1) {
        std::size_t i = 0;
        for (long long c : coeffs) {
            if (i > order) break;
            coeffs_[i++] = c;
        }
    }

    /// The constant series 1.
    static QSeries one(std::size_t order) {
        QSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    /// q^degree, or zero if the degree exceeds the order.
    static QSeries monomial(std::size_t degree, std::size_t order) {
        QSeries s(order);
        if (degree <= order) s.coeffs_[degree] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Coefficient of q^g; throws OrderExceeded past the truncation order.
    const BigInt& coefficient(std::size_t g) const {
        if (g >= coeffs_.size())
            throw OrderExceeded("coefficient of q^" + std::to_string(g) +
                                " requested from series of order " + std::to_string(order()));
        return coeffs_[g];
    }

    /// Degree of the lowest nonzero retained coefficient, if any.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    /// Copy truncated to `order` (zero-filling if the order grows).
    QSeries truncated(std::size_t order) const {
        return QSeries(coeffs_, order);
    }

    /// Equality compares the coefficients both sides retain: the two series
    /// are truncated to the smaller order before the coefficientwise check.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        for (std::size_t i = 0; i <= n; ++i)
            if (a.coeffs_[i] != b.coeffs_[i]) return false;
        return true;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        QSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        QSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    /// Cauchy product truncated at min(a.order, b.order).
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        QSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            const BigInt& ai = a.coeffs_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j + i <= n; ++j) {
                const BigInt& bj = b.coeffs_[j];
                if (bj == 0) continue;
                out.coeffs_[i + j] += ai * bj;
            }
        }
        return out;
    }

    QSeries& operator+=(const QSeries& rhs) { return *this = *this + rhs; }
    QSeries& operator*=(const QSeries& rhs) { return *this = *this * rhs; }

private:
    std::vector<BigInt> coeffs_; // coeffs_[g] = coefficient of q^g; size = order+1
};

/// Multiplicative inverse in Z[[q]] by the standard coefficient recurrence.
/// Requires constant term +1 or -1.
inline QSeries inverse(const QSeries& a) {
    const BigInt& a0 = a.coefficient(0);
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("series inverse requires constant term +1 or -1, got " +
                                  a0.str());
    const std::size_t n = a.order();
    std::vector<BigInt> b(n + 1);
    b[0] = a0; // a0 is its own inverse
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            const BigInt& ak = a.coeffs()[k];
            if (ak == 0) continue;
            acc += ak * b[m - k];
        }
        // 1/a0 == a0 here, so dividing by a0 is multiplying by it.
        b[m] = -a0 * acc;
    }
    return QSeries(std::move(b), n);
}

/// Multiply by q^s. A negative s divides exactly by q^{-s}: the low
/// coefficients that must vanish are checked, and the order is preserved
/// by zero-filling the top.
inline QSeries shift(const QSeries& a, long long s) {
    const std::size_t n = a.order();
    std::vector<BigInt> c(n + 1);
    if (s >= 0) {
        const std::size_t u = static_cast<std::size_t>(s);
        for (std::size_t j = u; j <= n; ++j) c[j] = a.coeffs()[j - u];
    } else {
        const std::size_t d = static_cast<std::size_t>(-s);
        for (std::size_t j = 0; j < std::min(d, n + 1); ++j)
            if (a.coeffs()[j] != 0)
                throw InexactPowerDivision("series is not divisible by q^" + std::to_string(d) +
                                           ": coefficient of q^" + std::to_string(j) +
                                           " is " + a.coeffs()[j].str());
        for (std::size_t j = 0; j + d <= n; ++j) c[j] = a.coeffs()[j + d];
    }
    return QSeries(std::move(c), n);
}

/// Exact integer power by square-and-multiply. Negative exponents invert
/// first and hence require a unit constant term.
inline QSeries pow(const QSeries& a, long long e) {
    if (e < 0) return pow(inverse(a), -e);
    QSeries result = QSeries::one(a.order());
    QSeries base = a;
    unsigned long long exp = static_cast<unsigned long long>(e);
    while (exp > 0) {
        if (exp & 1ULL) result *= base;
        exp >>= 1ULL;
        if (exp > 0) base *= base;
    }
    return result;
}

/// prod_{n=1..order} (1 - q^n)^exponent, truncated at `order`. Each factor
/// is expanded by its binomial series before multiplying; factors with
/// n > order cannot affect the retained coefficients.
inline QSeries euler_product(long long exponent, std::size_t order) {
    QSeries result = QSeries::one(order);
    if (exponent == 0) return result;
    for (std::size_t n = 1; n <= order; ++n) {
        std::vector<BigInt> f(order + 1);
        f[0] = 1;
        if (exponent > 0) {
            // (1 - q^n)^e = sum_j (-1)^j C(e, j) q^{nj}
            BigInt c = 1;
            for (std::size_t j = 1; j <= static_cast<unsigned long long>(exponent); ++j) {
                if (n * j > order) break;
                c *= exponent - static_cast<long long>(j) + 1;
                c /= j;
                f[n * j] = (j % 2 == 1) ? -c : c;
            }
        } else {
            // (1 - q^n)^{-E} = sum_j C(E+j-1, j) q^{nj}
            const long long E = -exponent;
            BigInt c = 1;
            for (std::size_t j = 1; n * j <= order; ++j) {
                c *= E + static_cast<long long>(j) - 1;
                c /= j;
                f[n * j] = c;
            }
        }
        result *= QSeries(std::move(f), order);
    }
    return result;
}

/// prod_{n>=1} (1 - q^n) by the pentagonal number theorem:
/// sum over all integers k of (-1)^k q^{k(3k-1)/2}. Must agree with
/// euler_product(1, order) coefficientwise.
inline QSeries pentagonal_series(std::size_t order) {
    QSeries s(order);
    std::vector<BigInt> c(order + 1);
    c[0] = 1; // k = 0
    for (long long k = 1;; ++k) {
        const long long e1 = k * (3 * k - 1) / 2; // k > 0
        const long long e2 = k * (3 * k + 1) / 2; // k < 0
        if (e1 > static_cast<long long>(order)) break;
        const int sign = (k % 2 == 1) ? -1 : 1;
        c[e1] += sign;
        if (e2 <= static_cast<long long>(order)) c[e2] += sign;
    }
    return QSeries(std::move(c), order);
}

/// Free-function form of QSeries::coefficient.
inline const BigInt& coefficient(const QSeries& a, std::size_t g) {
    return a.coefficient(g);
}

} // namespace k3count

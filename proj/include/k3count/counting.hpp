#pragma once

/// @file counting.hpp
/// The generating-function layer: the bivariate product
///
///   G_n(q, z) = (1 + z) prod_{k=1..n} (1 + q^k z)(1 + q^k z^{-1}),
///
/// its functional equation and coefficient recursion, the closed form of
/// the z^0 column, the dual-counting series, and the rational-curve
/// counting series sum_g N_g q^g = prod_{n>=1} (1 - q^n)^{-24}.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3count/qseries.hpp"

namespace k3count {

/// The coefficients C_{d,n} of G_n(q, z) as a finite family of q-series
/// indexed by the z-degree d in [-n, n+1]. Columns outside that window are
/// identically zero. The lowest q-degree of C_{d,n} is d(d-1)/2 for d > 0
/// and |d|(|d|+1)/2 for d < 0, which is what makes every exact q-power
/// division in the coefficient recursion succeed.
class LaurentBundle {
public:
    LaurentBundle(int n, std::size_t order)
        : n_(n), order_(order), cols_(static_cast<std::size_t>(2 * n + 2), QSeries(order)) {
        if (n < 0) throw std::invalid_argument("LaurentBundle: n must be nonnegative");
    }

    int n() const { return n_; }
    std::size_t order() const { return order_; }
    int min_degree() const { return -n_; }
    int max_degree() const { return n_ + 1; }
    bool in_window(int d) const { return d >= -n_ && d <= n_ + 1; }

    /// C_{d,n}; the zero series for d outside the window.
    QSeries at(int d) const {
        if (!in_window(d)) return QSeries(order_);
        return cols_[static_cast<std::size_t>(d + n_)];
    }

    void set(int d, QSeries s) {
        if (!in_window(d))
            throw std::out_of_range("LaurentBundle: z-degree " + std::to_string(d) +
                                    " outside [-n, n+1]");
        cols_[static_cast<std::size_t>(d + n_)] = std::move(s);
    }

private:
    int n_;
    std::size_t order_;
    std::vector<QSeries> cols_; // index d + n_
};

/// Expand G_n(q, z) by multiplying factors in a fixed order: (1 + z), then
/// for k = 1..n the pair (1 + q^k z), (1 + q^k z^{-1}).
inline LaurentBundle expand_G(int n, std::size_t order) {
    LaurentBundle g(n, order);
    g.set(0, QSeries::one(order));
    if (g.in_window(1)) g.set(1, QSeries::one(order)); // (1 + z); n = 0 keeps both
    for (int k = 1; k <= n; ++k) {
        // times (1 + q^k z): C_d += q^k C_{d-1}, high degrees first
        for (int d = g.max_degree(); d > g.min_degree(); --d)
            g.set(d, g.at(d) + shift(g.at(d - 1), k));
        // times (1 + q^k z^{-1}): C_d += q^k C_{d+1}, low degrees first
        for (int d = g.min_degree(); d < g.max_degree(); ++d)
            g.set(d, g.at(d) + shift(g.at(d + 1), k));
    }
    return g;
}

/// Coefficientwise check of (z + q^n) G_n(q, qz) = (1 + q^{n+1} z) G_n(q, z):
/// for every z-degree d,
///   q^{d-1} C_{d-1,n} + q^{n+d} C_{d,n} = C_{d,n} + q^{n+1} C_{d-1,n}
/// up to the retained q-order. A bundle violating the low-degree invariant
/// (so that q^{d-1} cannot divide C_{d-1,n} for d <= 0) fails the check.
inline bool check_functional_equation(const LaurentBundle& g) {
    const int n = g.n();
    for (int d = g.min_degree(); d <= g.max_degree() + 1; ++d) {
        QSeries prev = g.at(d - 1);
        QSeries cur = g.at(d);
        QSeries lhs(g.order());
        try {
            lhs = shift(prev, d - 1) + shift(cur, n + d);
        } catch (const InexactPowerDivision&) {
            return false;
        }
        const QSeries rhs = cur + shift(prev, n + 1);
        // For d <= 0 the exact division by q^{1-d} leaves the top 1-d
        // coefficients undetermined by the truncation; compare below them.
        const long long sound = (d >= 1) ? static_cast<long long>(g.order())
                                         : static_cast<long long>(g.order()) + d - 1;
        if (sound < 0) continue;
        if (!(lhs.truncated(static_cast<std::size_t>(sound)) ==
              rhs.truncated(static_cast<std::size_t>(sound))))
            return false;
    }
    return true;
}

/// C_{0,n} from the coefficient recursion
///   C_{d-1,n} = (1 - q^{n+d}) / (q^{d-1} (1 - q^{n-d+2})) C_{d,n}
/// started at C_{n+1,n} = q^{n(n+1)/2} and run down to d = 1. Internally
/// works at order + n(n+1)/2 so each exact division keeps full precision,
/// then truncates. Division by (1 - q^{n-d+2}) is series inversion and
/// division by q^{d-1} is an exact checked shift.
inline QSeries recursion_C0(int n, std::size_t order) {
    if (n < 0) throw std::invalid_argument("recursion_C0: n must be nonnegative");
    const std::size_t start = static_cast<std::size_t>(n) * (n + 1) / 2;
    const std::size_t work = order + start;
    QSeries c = QSeries::monomial(start, work);
    for (int d = n + 1; d >= 1; --d) {
        QSeries numer = QSeries::one(work) - QSeries::monomial(static_cast<std::size_t>(n + d), work);
        QSeries denom = QSeries::one(work) - QSeries::monomial(static_cast<std::size_t>(n - d + 2), work);
        c = shift(c * numer * inverse(denom), -(d - 1));
    }
    return c.truncated(order);
}

/// C_{0,n} in closed form:
///   prod_{j=n+2}^{2n+1} (1 - q^j) / prod_{j=1}^{n} (1 - q^j).
inline QSeries closed_form_C0(int n, std::size_t order) {
    if (n < 0) throw std::invalid_argument("closed_form_C0: n must be nonnegative");
    QSeries numer = QSeries::one(order);
    for (int j = n + 2; j <= 2 * n + 1; ++j)
        numer *= QSeries::one(order) - QSeries::monomial(static_cast<std::size_t>(j), order);
    QSeries denom = QSeries::one(order);
    for (int j = 1; j <= n; ++j)
        denom *= QSeries::one(order) - QSeries::monomial(static_cast<std::size_t>(j), order);
    return numer * inverse(denom);
}

/// sum_m P(m) q^m = prod_{n>=1} (1 - q^n)^{-1}.
inline QSeries partition_series(std::size_t order) {
    return euler_product(-1, order);
}

/// Same series through the sparse pentagonal product; cheaper at large
/// order and bit-identical to partition_series.
inline QSeries partition_series_fast(std::size_t order) {
    return inverse(pentagonal_series(order));
}

/// The dual-counting generating function
///   sum_{k>=0} q^{k^2} / ((1-q)(1-q^2)...(1-q^k))^2,
/// one term per square that still reaches the truncation order.
inline QSeries dual_counting_series(std::size_t order) {
    QSeries acc = QSeries::one(order); // k = 0
    QSeries denom = QSeries::one(order);
    for (std::size_t k = 1; k * k <= order; ++k) {
        denom *= QSeries::one(order) - QSeries::monomial(k, order);
        const QSeries inv = inverse(denom);
        acc += shift(inv * inv, static_cast<long long>(k * k));
    }
    return acc;
}

/// True iff the dual-counting series equals the partition series
/// coefficientwise up to `order` (both sides computed independently).
inline bool verify_durfee_identity(std::size_t order) {
    return dual_counting_series(order) == partition_series(order);
}

/// sum_g N_g q^g = prod_{n>=1} (1 - q^n)^{-24}, by the explicit product.
inline QSeries ng_series(std::size_t order) {
    return euler_product(-24, order);
}

/// The same counts as the 24-fold convolution of partition numbers,
/// sum over m_1 + ... + m_24 = g of P(m_1)...P(m_24): an independent
/// code path from ng_series.
inline QSeries ng_via_convolution(std::size_t order) {
    return pow(partition_series(order), 24);
}

/// Fast path for large genus: invert the 24th power of the sparse
/// pentagonal product. Bit-identical to ng_series.
inline QSeries ng_series_fast(std::size_t order) {
    return inverse(pow(pentagonal_series(order), 24));
}

} // namespace k3count

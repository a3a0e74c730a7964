#include <catch2/catch_amalgamated.hpp>

#include "k3count/counting.hpp"
#include "oracles.hpp"

using namespace k3count;

TEST_CASE("expand_G small cases") {
    const LaurentBundle g1 = expand_G(1, 3);
    CHECK(g1.at(2) == QSeries({0, 1}, 3));
    CHECK(g1.at(1) == QSeries({1, 1, 1}, 3));
    CHECK(g1.at(0) == QSeries({1, 1, 1}, 3));
    CHECK(g1.at(-1) == QSeries({0, 1}, 3));
    CHECK(g1.at(5).is_zero());  // outside the window
    CHECK(g1.at(-7).is_zero());

    const LaurentBundle g0 = expand_G(0, 2);
    CHECK(g0.at(1) == QSeries::one(2));
    CHECK(g0.at(0) == QSeries::one(2));
}

TEST_CASE("top column is the staircase monomial") {
    for (int n = 0; n <= 6; ++n) {
        const std::size_t order = 30;
        const LaurentBundle g = expand_G(n, order);
        CHECK(g.at(n + 1) == QSeries::monomial(static_cast<std::size_t>(n) * (n + 1) / 2, order));
    }
}

TEST_CASE("low-degree invariant of the columns") {
    for (int n : {3, 8}) {
        const LaurentBundle g = expand_G(n, 40);
        for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
            const auto v = g.at(d).valuation();
            REQUIRE(v.has_value());
            const long long bound = d > 0 ? static_cast<long long>(d) * (d - 1) / 2
                                          : static_cast<long long>(-d) * (-d + 1) / 2;
            CHECK(static_cast<long long>(*v) >= bound);
        }
    }
}

TEST_CASE("functional equation") {
    CHECK(check_functional_equation(expand_G(1, 10)));
    CHECK(check_functional_equation(expand_G(5, 30)));

    // a single perturbed coefficient must be detected
    LaurentBundle g = expand_G(3, 20);
    std::vector<BigInt> c = g.at(0).coeffs();
    c[4] += 1;
    g.set(0, QSeries(std::move(c), g.order()));
    CHECK_FALSE(check_functional_equation(g));
}

TEST_CASE("functional equation detects a broken divisibility invariant") {
    LaurentBundle g = expand_G(2, 12);
    std::vector<BigInt> c = g.at(-2).coeffs();
    c[0] += 1; // valuation of C_{-2} must be >= 3
    g.set(-2, QSeries(std::move(c), g.order()));
    CHECK_FALSE(check_functional_equation(g));
}

TEST_CASE("recursion_C0") {
    CHECK(recursion_C0(1, 3) == QSeries({1, 1, 1}, 3));
    CHECK(recursion_C0(0, 5) == QSeries::one(5));
    CHECK(recursion_C0(2, 3) == QSeries({1, 1, 2, 2}, 3));
    CHECK(recursion_C0(2, 3) == closed_form_C0(2, 3));
}

TEST_CASE("closed_form_C0") {
    CHECK(closed_form_C0(2, 3) == QSeries({1, 1, 2, 2}, 3));
    CHECK(closed_form_C0(0, 4) == QSeries({1}, 4));
    CHECK(closed_form_C0(1, 3) == QSeries({1, 1, 1, 0}, 3));
}

TEST_CASE("three routes to C_{0,n} agree") {
    for (int n = 0; n <= 10; ++n) {
        const std::size_t order = 40;
        const QSeries direct = expand_G(n, order).at(0);
        const QSeries rec = recursion_C0(n, order);
        const QSeries closed = closed_form_C0(n, order);
        CHECK(rec == closed);
        CHECK(closed == direct);
        CHECK(check_functional_equation(expand_G(n, order)));
    }
}

TEST_CASE("stabilization towards the partition series") {
    const std::size_t order = 40;
    const QSeries ps = partition_series(order);
    for (int n = 0; n <= 10; ++n) {
        const QSeries c0 = closed_form_C0(n, order);
        for (std::size_t d = 0; d <= static_cast<std::size_t>(n); ++d)
            CHECK(c0.coefficient(d) == ps.coefficient(d));
    }
    // the approximation is strict: C_{0,n} is not the full partition series
    CHECK_FALSE(closed_form_C0(3, order) == ps);
}

TEST_CASE("partition_series") {
    CHECK(partition_series(5) == QSeries({1, 1, 2, 3, 5, 7}, 5));
    CHECK(partition_series(0) == QSeries({1}, 0));
    CHECK(partition_series(10).coefficient(10) == 42);
    CHECK(partition_series(3) * pentagonal_series(3) == QSeries::one(3));
    CHECK(partition_series_fast(64) == partition_series(64));
    CHECK(partition_series_fast(64).order() == 64);
}

TEST_CASE("dual_counting_series") {
    CHECK(dual_counting_series(2) == QSeries({1, 1, 2}, 2));
    CHECK(dual_counting_series(0) == QSeries({1}, 0));
    CHECK(dual_counting_series(4).coefficient(4) == 5);
}

TEST_CASE("durfee identity") {
    CHECK(verify_durfee_identity(60));
    CHECK(verify_durfee_identity(0));

    // dropping the k=1 term breaks the identity already at order 1
    const std::size_t order = 12;
    QSeries crippled = QSeries::one(order); // k = 0
    QSeries denom = QSeries::one(order);
    for (std::size_t k = 1; k * k <= order; ++k) {
        denom *= QSeries::one(order) - QSeries::monomial(k, order);
        if (k == 1) continue;
        const QSeries inv = inverse(denom);
        crippled += shift(inv * inv, static_cast<long long>(k * k));
    }
    CHECK_FALSE(crippled == partition_series(order));
    CHECK(crippled.coefficient(0) == partition_series(order).coefficient(0));
    CHECK_FALSE(crippled.coefficient(1) == partition_series(order).coefficient(1));
}

TEST_CASE("ng series low coefficients") {
    const QSeries ng = ng_series(3);
    CHECK(ng.coefficient(0) == 1);
    CHECK(ng.coefficient(1) == 24);
    CHECK(ng.coefficient(2) == 324);
    CHECK(ng.coefficient(3) == 3200);
    CHECK(ng_via_convolution(3) == QSeries({1, 24, 324, 3200}, 3));
    CHECK(ng_via_convolution(0) == QSeries({1}, 0));
}

TEST_CASE("ng cross-path agreement") {
    const QSeries a = ng_series(30);
    const QSeries b = ng_via_convolution(30);
    const QSeries c = ng_series_fast(30);
    CHECK(a == b);
    CHECK(b == c);
    // and against the test-side oracles
    CHECK(a.coeffs() == oracles::counts_by_24fold_convolution(30));
}

TEST_CASE("dual series counts admissible configurations") {
    // checked by coefficient against the oracle identity at higher order in
    // the durfee test; here against the partition numbers directly
    const QSeries dual = dual_counting_series(14);
    const auto dp = oracles::dp_partition_counts(14);
    for (std::size_t m = 0; m <= 14; ++m) CHECK(dual.coefficient(m) == dp[m]);
}

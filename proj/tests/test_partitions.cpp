#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <thread>

#include "k3count/partitions.hpp"
#include "k3count/qseries.hpp"
#include "oracles.hpp"

using namespace k3count;

TEST_CASE("YoungDiagram validation") {
    CHECK(YoungDiagram({4, 2, 1}).weight() == 7);
    CHECK(YoungDiagram{}.weight() == 0);
    CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_partitions canonical order") {
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].parts().empty());

    const auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0].parts() == std::vector<int>{4});
    CHECK(four[1].parts() == std::vector<int>{3, 1});
    CHECK(four[2].parts() == std::vector<int>{2, 2});
    CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});

    CHECK(enumerate_partitions(5).size() == 7);
}

TEST_CASE("partition_p") {
    CHECK(partition_p(0) == 1);
    CHECK(partition_p(10) == 42);
    CHECK(partition_p(-3) == 0);
    // against the independent DP oracle, well past enumeration comfort
    const auto dp = oracles::dp_partition_counts(120);
    for (int m : {40, 77, 120}) CHECK(partition_p(m) == dp[static_cast<std::size_t>(m)]);
}

TEST_CASE("partition_p under concurrent queries") {
    const auto dp = oracles::dp_partition_counts(300);
    std::vector<std::thread> workers;
    std::vector<int> bad(4, 0);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([t, &dp, &bad] {
            for (int m = 300 - t; m >= 0; m -= 4)
                if (partition_p(m) != dp[static_cast<std::size_t>(m)]) bad[t] = m + 1;
        });
    for (auto& w : workers) w.join();
    CHECK(bad == std::vector<int>(4, 0));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(YoungDiagram({5, 4, 4, 3, 2, 1})).parts() == std::vector<int>{6, 5, 4, 3, 1});
    CHECK(conjugate(YoungDiagram{}).parts().empty());
    CHECK(conjugate(YoungDiagram({3, 1})).parts() == std::vector<int>{2, 1, 1});
}

TEST_CASE("conjugation is a weight-preserving involution") {
    for (int m = 0; m <= 20; ++m)
        for (const auto& d : enumerate_partitions(m)) {
            const YoungDiagram c = conjugate(d);
            CHECK(c.weight() == d.weight());
            CHECK(conjugate(c) == d);
        }
}

TEST_CASE("three independent paths to P(m)") {
    const QSeries series = euler_product(-1, 45);
    const auto dp = oracles::dp_partition_counts(45);
    for (int m = 0; m <= 45; ++m) {
        const BigInt by_enum = enumerate_partitions(m).size();
        CHECK(by_enum == partition_p(m));
        CHECK(by_enum == series.coefficient(static_cast<std::size_t>(m)));
        CHECK(by_enum == dp[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("conjugate is strictly decreasing iff all values up to the max occur") {
    for (int m = 0; m <= 16; ++m)
        for (const auto& d : enumerate_partitions(m)) {
            const auto& parts = d.parts();
            const auto conj = conjugate(d).parts();
            bool strict = true;
            for (std::size_t i = 0; i + 1 < conj.size(); ++i)
                if (conj[i] <= conj[i + 1]) strict = false;
            const std::set<int> values(parts.begin(), parts.end());
            bool all_present = true;
            for (int v = 1; v <= (parts.empty() ? 0 : parts.front()); ++v)
                if (!values.count(v)) all_present = false;
            CHECK(strict == all_present);
        }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partsamp/partition.hpp"

using namespace partsamp;

TEST_CASE("partition_count basic values") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(1) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(12) == 77);
    CHECK(partition_count(100) == BigCount("190569292"));
}

TEST_CASE("enumeration oracle matches the counting recurrences") {
    for (std::uint64_t n = 1; n <= 35; ++n) {
        std::uint64_t emitted = 0;
        for_each_partition(n, [&](const Partition& lam) {
            lam.validate();
            ++emitted;
        });
        CHECK(BigCount(emitted) == partition_count(n));
    }
}

TEST_CASE("hand-enumerated small cases") {
    auto p1 = enumerate_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].mults == std::map<std::uint64_t, std::uint64_t>{{1, 1}});

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].mults == std::map<std::uint64_t, std::uint64_t>{{3, 1}});
    CHECK(p3[1].mults == std::map<std::uint64_t, std::uint64_t>{{2, 1}, {1, 1}});
    CHECK(p3[2].mults == std::map<std::uint64_t, std::uint64_t>{{1, 3}});

    CHECK(enumerate_partitions(4).size() == 5);
    CHECK_THROWS_AS(enumerate_partitions(41), std::invalid_argument);
}

TEST_CASE("bounded_count examples and recurrence") {
    CHECK(bounded_count(5, 1) == 1);
    CHECK(bounded_count(5, 5) == 7);
    CHECK(bounded_count(5, 2) == 3);
    CHECK(bounded_count(0, 3) == 1);
    // q(n,k) = q(n,k-1) + q(n-k,k)
    for (std::uint64_t n = 1; n <= 20; ++n)
        for (std::uint64_t k = 2; k <= n; ++k)
            CHECK(bounded_count(n, k) == bounded_count(n, k - 1) + bounded_count(n - k, k));
}

TEST_CASE("bounded_count is monotone in k and stabilizes at p(n)") {
    for (std::uint64_t n : {7, 13, 30}) {
        BigCount prev = 0;
        for (std::uint64_t k = 1; k <= n + 3; ++k) {
            BigCount cur = bounded_count(n, k);
            CHECK(cur >= prev);
            prev = cur;
        }
        CHECK(bounded_count(n, n) == partition_count(n));
        CHECK(bounded_count(n, n + 3) == partition_count(n));
    }
}

TEST_CASE("two independent counting algorithms agree up to 200") {
    PartitionTable table(200);
    BoundedCountTable bounded(200);
    for (std::uint64_t n = 0; n <= 200; ++n) CHECK(table.p(n) == bounded.q(n, n));
}

TEST_CASE("BoundedCountTable matches the rolling DP") {
    BoundedCountTable table(40);
    for (std::uint64_t n = 1; n <= 40; n += 7)
        for (std::uint64_t k = 1; k <= n; k += 3) CHECK(table.q(n, k) == bounded_count(n, k));
}

TEST_CASE("partition JSON round trip") {
    Partition lam;
    lam.n = 7;
    lam.mults = {{3, 1}, {2, 2}};
    lam.validate();
    nlohmann::json j = lam;
    CHECK(j["n"] == 7);
    CHECK(j["mults"]["2"] == 2);
    Partition back = j.get<Partition>();
    CHECK(back.n == lam.n);
    CHECK(back.mults == lam.mults);
}

TEST_CASE("invariant violations are rejected") {
    Partition bad;
    bad.n = 5;
    bad.mults = {{2, 2}};  // sums to 4
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.mults = {{6, 1}};  // part above n
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("log_p tracks known magnitudes") {
    PartitionTable table(100);
    CHECK(table.log_p(100) == doctest::Approx(std::log(190569292.0)).epsilon(1e-12));
}

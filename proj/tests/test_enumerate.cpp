#include "doctest.h"

#include <vector>

#include <partlab/enumerate.hpp>
#include <partlab/errors.hpp>

using namespace partlab;

namespace {
const std::vector<long long> kPartitionCounts = {1, 1, 2, 3, 5, 7, 11, 15,
                                                 22, 30, 42, 56, 77, 101, 135};
const std::vector<long long> kDistinctCounts = {1, 1, 1, 2, 2, 3, 4, 5,
                                                6, 8, 10, 12, 15, 18, 22};
} // namespace

TEST_CASE("unrestricted counts match the classical table") {
    for (std::size_t n = 0; n < kPartitionCounts.size(); ++n)
        CHECK(count_partitions(static_cast<long long>(n)) == kPartitionCounts[n]);
}

TEST_CASE("distinct counts match the classical table") {
    Constraints c;
    c.distinct = true;
    for (std::size_t n = 0; n < kDistinctCounts.size(); ++n)
        CHECK(count_partitions(static_cast<long long>(n), c) == kDistinctCounts[n]);
}

TEST_CASE("distinct equals odd-parts counts through 24") {
    Constraints distinct;
    distinct.distinct = true;
    Constraints odd;
    odd.predicate = [](const std::vector<int>& parts) {
        for (int v : parts)
            if (v % 2 == 0) return false;
        return true;
    };
    for (long long n = 0; n <= 24; ++n)
        CHECK(count_partitions(n, distinct) == count_partitions(n, odd));
}

TEST_CASE("visit order is lexicographically descending") {
    std::vector<std::vector<int>> seen;
    for_each_partition(5, [&](const std::vector<int>& parts) {
        seen.push_back(parts);
        return true;
    });
    std::vector<std::vector<int>> want = {{5}, {4, 1}, {3, 2}, {3, 1, 1},
                                          {2, 2, 1}, {2, 1, 1, 1},
                                          {1, 1, 1, 1, 1}};
    CHECK(seen == want);
}

TEST_CASE("visitor returning false stops the walk") {
    int visits = 0;
    for_each_partition(8, [&](const std::vector<int>&) {
        return ++visits < 3;
    });
    CHECK(visits == 3);
}

TEST_CASE("part-size and part-count constraints") {
    Constraints c;
    c.max_part = 3;
    CHECK(count_partitions(6, c) == 7); // 3+3, 3+2+1, 3+1*3, 2*3, 2+2+1+1, 2+1*4, 1*6
    c = {};
    c.min_part = 3;
    CHECK(count_partitions(9, c) == 4); // 9, 6+3, 5+4, 3+3+3
    c = {};
    c.exact_parts = 3;
    CHECK(count_partitions(9, c) == 7);
    c = {};
    c.max_parts = 2;
    CHECK(count_partitions(7, c) == 4); // 7, 6+1, 5+2, 4+3
    c = {};
    c.exact_parts = 3;
    c.distinct = true;
    CHECK(count_partitions(9, c) == 3); // 6+2+1, 5+3+1, 4+3+2
}

TEST_CASE("partitions_of materializes the same walk") {
    auto all = partitions_of(6);
    CHECK(all.size() == 11);
    CHECK(all.front() == Partition({6}));
    CHECK(all.back() == Partition({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("negative weight is rejected") {
    CHECK_THROWS_AS(count_partitions(-1), DomainError);
}

TEST_CASE("weight zero yields exactly the empty partition") {
    auto all = partitions_of(0);
    REQUIRE(all.size() == 1);
    CHECK(all.front().empty());
}

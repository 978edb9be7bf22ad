#include "doctest.h"

#include <vector>

#include <partlab/enumerate.hpp>
#include <partlab/errors.hpp>
#include <partlab/partition.hpp>

using namespace partlab;

TEST_CASE("partition construction validates order and positivity") {
    CHECK_NOTHROW(Partition({5, 3, 3, 1}));
    CHECK_NOTHROW(Partition(std::vector<int>{}));
    CHECK_THROWS_AS(Partition({3, 5}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
    CHECK(Partition::from_unsorted({1, 5, 3}) == Partition({5, 3, 1}));
}

TEST_CASE("basic accessors") {
    Partition p({5, 3, 3, 1});
    CHECK(p.count() == 4);
    CHECK(p.weight() == 12);
    CHECK(p.largest() == 5);
    CHECK(p.smallest() == 1);
    CHECK(p.multiplicity(3) == 2);
    CHECK(p.multiplicity(4) == 0);
    CHECK_FALSE(p.has_distinct_parts());
    CHECK(Partition({5, 3, 1}).has_distinct_parts());
    Partition e;
    CHECK(e.empty());
    CHECK(e.largest() == 0);
    CHECK(e.weight() == 0);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition(std::vector<int>{})) == Partition(std::vector<int>{}));
    CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));
}

TEST_CASE("conjugate is an involution on everything through 14") {
    for (long long n = 0; n <= 14; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p(parts);
            CHECK(conjugate(conjugate(p)) == p);
            return true;
        });
}

TEST_CASE("the worked ten-part example") {
    Partition p({11, 11, 11, 9, 7, 5, 5, 4, 4, 3});
    CHECK(durfee_size(p) == 5);
    DurfeeSymbol s = durfee_symbol(p);
    CHECK(s.d == 5);
    CHECK(s.top == std::vector<int>{5, 5, 4, 4, 3, 3});
    CHECK(s.bottom == std::vector<int>{5, 5, 4, 4, 3});
    CHECK(rank(p) == 1);
    CHECK(from_durfee_symbol(s) == p);
}

TEST_CASE("durfee symbol edge shapes") {
    CHECK(durfee_symbol(Partition(std::vector<int>{})) == DurfeeSymbol{});
    DurfeeSymbol one = durfee_symbol(Partition({1}));
    CHECK(one.d == 1);
    CHECK(one.top.empty());
    CHECK(one.bottom.empty());
    DurfeeSymbol row = durfee_symbol(Partition({4}));
    CHECK(row.d == 1);
    CHECK(row.top == std::vector<int>{1, 1, 1});
    CHECK(row.bottom.empty());
}

TEST_CASE("frobenius coordinates of (5,3,3,1)") {
    FrobeniusSymbol f = frobenius_symbol(Partition({5, 3, 3, 1}));
    CHECK(f.top == std::vector<int>{4, 1, 0});
    CHECK(f.bottom == std::vector<int>{3, 1, 0});
    CHECK(from_frobenius(f) == Partition({5, 3, 3, 1}));
}

TEST_CASE("symbol round trips on everything through 14") {
    for (long long n = 0; n <= 14; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p(parts);
            CHECK(from_durfee_symbol(durfee_symbol(p)) == p);
            CHECK(from_frobenius(frobenius_symbol(p)) == p);
            return true;
        });
}

TEST_CASE("rank is largest part minus part count") {
    CHECK(rank(Partition(std::vector<int>{})) == 0);
    CHECK(rank(Partition({4})) == 3);
    CHECK(rank(Partition({1, 1, 1, 1})) == -3);
    CHECK(rank(Partition({2, 2})) == 0);
}

TEST_CASE("printing uses comma notation") {
    CHECK(to_string(Partition({9, 6, 5, 2})) == "(9,6,5,2)");
    CHECK(to_string(Partition(std::vector<int>{})) == "()");
}

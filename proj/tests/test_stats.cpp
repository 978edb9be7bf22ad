#include "doctest.h"

#include <vector>

#include <partlab/errors.hpp>
#include <partlab/stats.hpp>

using namespace partlab;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

void check_table(const std::string& key, const std::vector<long long>& want,
                 long long from = 0) {
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK_MESSAGE(evaluate_statistic(key, from + static_cast<long long>(i)) ==
                          want[i],
                      key, " at n=", from + static_cast<long long>(i));
}
} // namespace

TEST_CASE("flushed predicate on the weight-7 list") {
    CHECK(is_flushed(P({6, 1})));
    CHECK(is_flushed(P({4, 1, 1, 1})));
    CHECK(is_flushed(P({3, 3, 1})));
    CHECK(is_flushed(P({2, 2, 1, 1, 1})));
    CHECK(is_flushed(P({1, 1, 1, 1, 1, 1, 1})));
    CHECK_FALSE(is_flushed(P({7})));
    CHECK_FALSE(is_flushed(P({5, 2})));
    CHECK_FALSE(is_flushed(P({})));
    CHECK_FALSE(is_flushed(P({2, 2}))); // least even-multiplicity value is 1
}

TEST_CASE("proper predicate on the weight-6 list") {
    CHECK(is_proper(P({4, 2})));
    CHECK(is_proper(P({3, 2, 1})));
    CHECK(is_proper(P({2, 2, 1, 1})));
    CHECK_FALSE(is_proper(P({6})));
    CHECK_FALSE(is_proper(P({5, 1})));
    CHECK_FALSE(is_proper(P({3, 3})));
    CHECK(is_proper(P({})));
    CHECK(is_proper(P({11, 11, 11, 9, 7, 5, 5, 4, 4, 3})));
}

TEST_CASE("initial repetitions look only at values repeated k times") {
    CHECK(has_initial_repetitions(P({}), 2));
    CHECK(has_initial_repetitions(P({3, 1, 1}), 2)); // only 1 is repeated
    CHECK(has_initial_repetitions(P({2, 2, 1, 1}), 2));
    CHECK_FALSE(has_initial_repetitions(P({2, 2, 1}), 2)); // 1 under-repeated
    CHECK_FALSE(has_initial_repetitions(P({3, 3, 1, 1}), 2)); // 2 missing
    CHECK(has_initial_repetitions(P({5, 4, 3}), 2)); // nothing repeated
    CHECK(has_initial_repetitions(P({2, 1, 1, 1}), 3));
    CHECK_FALSE(has_initial_repetitions(P({2, 2, 2, 1}), 3));
    CHECK_THROWS_AS(has_initial_repetitions(P({1}), 0), DomainError);
}

TEST_CASE("small scalar helpers") {
    CHECK(smallest_missing_part(P({})) == 1);
    CHECK(smallest_missing_part(P({3, 2, 1})) == 4);
    CHECK(smallest_missing_part(P({5, 2, 1, 1})) == 3);
    CHECK_FALSE(first_gap_size(P({})).has_value());
    CHECK_FALSE(first_gap_size(P({3, 2, 1})).has_value());
    CHECK(first_gap_size(P({3, 1})) == 2);    // between 1 and 3
    CHECK(first_gap_size(P({5, 4, 2})) == 2); // between the virtual 0 and 2
    CHECK(first_gap_size(P({2})) == 2);       // likewise
    CHECK(is_staircase(P({})));
    CHECK(is_staircase(P({3, 2, 1})));
    CHECK_FALSE(is_staircase(P({3, 1})));
    CHECK_FALSE(is_staircase(P({2, 2, 1})));
    CHECK(frobenius_top_contains_zero(P({2, 2})));
    CHECK(frobenius_top_contains_zero(P({3, 2}))); // second arm is 2-2 = 0
    CHECK_FALSE(frobenius_top_contains_zero(P({2})));
    CHECK_FALSE(frobenius_top_contains_zero(P({})));
}

TEST_CASE("counting statistics match the frozen tables") {
    check_table("p", {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135});
    check_table("Q", {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22});
    check_table("Q_E", {1, 0, 0, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 11});
    check_table("F", {0, 1, 0, 1, 1, 3, 3, 5, 6, 10, 12, 18, 23, 33, 41});
    check_table("PR", {1, 1, 0, 1, 1, 3, 3, 5, 6, 10, 12, 18, 23, 33, 41});
    check_table("UF_odd", {0, 0, 1, 1, 2, 2, 4, 5, 8, 10, 15, 19, 27, 34, 47});
    check_table("UF_even", {1, 0, 1, 1, 2, 2, 4, 5, 8, 10, 15, 19, 27, 34, 47});
    check_table("IMPR", {0, 0, 2, 2, 4, 4, 8, 10, 16, 20, 30, 38, 54, 68, 94});
}

TEST_CASE("UF splits into the parity halves") {
    for (long long n = 0; n <= 14; ++n)
        CHECK(evaluate_statistic("UF", n) ==
              evaluate_statistic("UF_odd", n) + evaluate_statistic("UF_even", n));
}

TEST_CASE("distinct-part parity splits match the frozen tables") {
    check_table("D_ee", {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2});
    check_table("D_eo", {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 5});
    check_table("D_oe", {0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 2, 3});
    check_table("D_oo", {0, 1, 0, 1, 0, 1, 1, 2, 2, 3, 3, 4, 5});
}

TEST_CASE("signed statistics match the frozen tables") {
    check_table("Ne_minus_No", {1, 1, -2, 3, -3, 3, -5, 7, -6, 6, -10, 12, -11});
    check_table("Lo_minus_Le", {0, 1, -1, 2, 0, 1, 0, 3, 2, 2, 2, 4, 5});
}

TEST_CASE("largest-part parity counts match the frozen tables") {
    check_table("Po_D", {0, 1, 0, 1, 1, 2, 2, 2, 3, 4, 5, 6, 8});
    check_table("Pe_D", {0, 0, 1, 1, 1, 1, 2, 3, 3, 4, 5, 6, 7});
}

TEST_CASE("frobenius and missing-part counts agree and match the table") {
    check_table("frob_no_zero_top", {1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42});
    check_table("smallest_missing_odd",
                {1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42});
}

TEST_CASE("rank counts at weight 8 across all m") {
    const std::vector<long long> want = {1, 0, 1, 1, 2, 2, 3, 2,
                                         3, 2, 2, 1, 1, 0, 1};
    for (long long m = -7; m <= 7; ++m)
        CHECK(evaluate_statistic("N_rank", 8, m) ==
              want[static_cast<std::size_t>(m + 7)]);
    // Omitting m totals over every rank.
    CHECK(evaluate_statistic("N_rank", 8) == 22);
}

TEST_CASE("m-refined tables at weight 8") {
    CHECK(evaluate_statistic("De_mn", 8, 1) == 1);
    CHECK(evaluate_statistic("Do_mn", 8, 1) == 1);
    CHECK(evaluate_statistic("De_mn", 8, 2) == 5);
    CHECK(evaluate_statistic("Do_mn", 8, 2) == 5);
    CHECK(evaluate_statistic("De_mn", 8, 3) == 2);
    CHECK(evaluate_statistic("Do_mn", 8, 3) == 2);

    CHECK(evaluate_statistic("Ie_mn", 8, 1) - evaluate_statistic("Io_mn", 8, 1) == 1);
    CHECK(evaluate_statistic("Ie_mn", 8, 2) - evaluate_statistic("Io_mn", 8, 2) == 1);
    CHECK(evaluate_statistic("Ie_mn", 8, 3) - evaluate_statistic("Io_mn", 8, 3) == 0);
    CHECK(evaluate_statistic("Se_mn", 8, 1) - evaluate_statistic("So_mn", 8, 1) == 1);
    CHECK(evaluate_statistic("Se_mn", 8, 2) - evaluate_statistic("So_mn", 8, 2) == 1);
    CHECK(evaluate_statistic("Se_mn", 8, 3) - evaluate_statistic("So_mn", 8, 3) == 0);

    CHECK(evaluate_statistic("X_cor44", 8, 2) == 1);
    CHECK(evaluate_statistic("X_cor44", 8, 3) == 1);
    CHECK(evaluate_statistic("X_cor44", 8, 4) == 2);
    CHECK(evaluate_statistic("X_cor44", 8, 5) == 1);
    CHECK(evaluate_statistic("X_cor44", 8, 6) == 1);
    CHECK(evaluate_statistic("X_cor44", 8, 1) == 0);
}

TEST_CASE("registry metadata and errors") {
    CHECK(statistic_registry().size() == 27);
    CHECK(is_known_statistic("F"));
    CHECK_FALSE(is_known_statistic("nope"));
    CHECK_THROWS_AS(evaluate_statistic("nope", 3), RegistryError);
    CHECK_THROWS_AS(evaluate_statistic("F", -1), DomainError);
    CHECK_THROWS_AS(evaluate_statistic("F", 3, 1), DomainError); // F has no m
    CHECK_THROWS_AS(evaluate_statistic("F", 100), FeasibilityError);
    CHECK_NOTHROW(evaluate_statistic("p", 500)); // series-backed, far past 70
    CHECK_THROWS_AS(evaluate_statistic("p", 2001), FeasibilityError);
}

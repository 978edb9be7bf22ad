#include "doctest.h"

#include <vector>

#include <partlab/enumerate.hpp>
#include <partlab/errors.hpp>
#include <partlab/series.hpp>

using namespace partlab;

namespace {
TruncatedSeries geometric_like(int order) {
    // 1/(1-q) as an inversion target.
    return pochhammer(1, 1, 1, 1, order).invert();
}
} // namespace

TEST_CASE("monomial and constant basics") {
    TruncatedSeries m = TruncatedSeries::monomial(3, 2, 5);
    CHECK(m.coeff(2) == 3);
    CHECK(m.coeff(0) == 0);
    CHECK(m.order() == 5);
    // A degree beyond the window is representable as the zero series.
    TruncatedSeries far = TruncatedSeries::monomial(1, 9, 5);
    CHECK_FALSE(far.min_degree().has_value());
    CHECK_THROWS_AS(TruncatedSeries::monomial(1, -1, 5), DomainError);
    CHECK_THROWS_AS(m.coeff(6), DomainError);
}

TEST_CASE("euler product matches its classical expansion") {
    TruncatedSeries qq = pochhammer(1, 1, 1, std::nullopt, 7);
    std::vector<BigInt> want = {1, -1, -1, 0, 0, 1, 0, 1};
    for (int d = 0; d <= 7; ++d) CHECK(qq.coeff(d) == want[static_cast<std::size_t>(d)]);
}

TEST_CASE("inverted euler product counts partitions") {
    const std::vector<long long> p = {1, 1, 2, 3, 5, 7, 11, 15,
                                      22, 30, 42, 56, 77, 101, 135};
    TruncatedSeries gf = pochhammer(1, 1, 1, std::nullopt, 14).invert();
    for (int n = 0; n <= 14; ++n)
        CHECK(gf.coeff(n) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("series inversion round-trips") {
    TruncatedSeries s = pochhammer(-1, 1, 1, 6, 20);
    TruncatedSeries one = TruncatedSeries::constant(1, 20);
    CHECK(s * s.invert() == one);
    CHECK_THROWS_AS(TruncatedSeries::constant(2, 5).invert(), NonInvertibleError);
    CHECK_THROWS_AS(TruncatedSeries(5).invert(), NonInvertibleError);
}

TEST_CASE("finite pochhammer agrees with repeated binomials") {
    TruncatedSeries direct = pochhammer(1, 2, 3, 3, 15);
    TruncatedSeries manual = TruncatedSeries::constant(1, 15)
                                 .times_binomial(-1, 2)
                                 .times_binomial(-1, 5)
                                 .times_binomial(-1, 8);
    CHECK(direct == manual);
    // base_sign -1 flips every factor to 1 + q^e.
    TruncatedSeries plus = pochhammer(-1, 1, 1, 2, 10);
    CHECK(plus == TruncatedSeries::constant(1, 10)
                      .times_binomial(1, 1)
                      .times_binomial(1, 2));
}

TEST_CASE("infinite products require positive lead exponent") {
    CHECK_THROWS_AS(pochhammer(1, 0, 1, std::nullopt, 5), DomainError);
    CHECK_NOTHROW(pochhammer(1, 0, 1, 3, 5)); // finite with j = 0 is fine
}

TEST_CASE("substitutions") {
    TruncatedSeries s = TruncatedSeries::from_coefficients({1, 2, 3, 4});
    TruncatedSeries neg = s.substitute_q_negate();
    CHECK(neg.coeff(0) == 1);
    CHECK(neg.coeff(1) == -2);
    CHECK(neg.coeff(2) == 3);
    CHECK(neg.coeff(3) == -4);
    TruncatedSeries sq = s.substitute_q_power(2);
    CHECK(sq.order() == 7);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 0);
    CHECK(sq.coeff(2) == 2);
    CHECK(sq.coeff(6) == 4);
    CHECK(sq.coeff(7) == 0);
}

TEST_CASE("arithmetic truncates to the smaller order") {
    TruncatedSeries a = geometric_like(10);
    TruncatedSeries b = geometric_like(4);
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
    CHECK(a == b); // equality compares through the smaller order
}

TEST_CASE("first_mismatch finds the lowest differing degree") {
    TruncatedSeries a = geometric_like(10);
    TruncatedSeries b = a + TruncatedSeries::monomial(5, 7, 10);
    auto m = first_mismatch(a, b);
    REQUIRE(m.has_value());
    CHECK(m->degree == 7);
    CHECK(m->lhs == 1);
    CHECK(m->rhs == 6);
    CHECK_FALSE(first_mismatch(a, a).has_value());
}

TEST_CASE("sum_series adds families with growing lead degree") {
    // Sum of q^(n^2) for n >= 0.
    TruncatedSeries squares = sum_series(30, 0, [](long long n) {
        return TruncatedSeries::monomial(1, static_cast<int>(n * n), 30);
    });
    for (int d = 0; d <= 30; ++d) {
        long long r = 0;
        for (long long j = 0; j * j <= d; ++j)
            if (j * j == d) r = 1;
        CHECK(squares.coeff(d) == r);
    }
}

TEST_CASE("sum_series rejects families that never leave the window") {
    CHECK_THROWS_AS(sum_series(5, 0,
                               [](long long) {
                                   return TruncatedSeries::constant(1, 5);
                               }),
                    DivergenceError);
}

TEST_CASE("sum_series rejects summands built below the order") {
    CHECK_THROWS_AS(sum_series(9, 0,
                               [](long long) {
                                   return TruncatedSeries::constant(1, 3);
                               }),
                    DomainError);
}

TEST_CASE("str shows a truncated tail marker") {
    TruncatedSeries s = TruncatedSeries::from_coefficients({1, -1, 0, 2});
    CHECK(s.str() == "1 - q + 2q^3 + O(q^4)");
}

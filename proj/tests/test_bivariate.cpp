#include "doctest.h"

#include <partlab/bivariate.hpp>
#include <partlab/errors.hpp>

using namespace partlab;

namespace {
long long tri(long long n) { return n * (n + 1) / 2; }
} // namespace

TEST_CASE("zpoly arithmetic and trimming") {
    ZPoly a({1, 2});          // 1 + 2z
    ZPoly b({0, -2, 3});      // -2z + 3z^2
    ZPoly sum = a + b;
    CHECK(sum.coeff(0) == 1);
    CHECK(sum.coeff(1) == 0);
    CHECK(sum.coeff(2) == 3);
    CHECK(sum.degree() == 2);
    ZPoly prod = a * b; // -2z + 3z^2 - 4z^2 + 6z^3
    CHECK(prod.coeff(1) == -2);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(3) == 6);
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a.value_at_one() == 3);
    CHECK(a.value_at(-1) == -1);
    CHECK(ZPoly({1, 2}).shifted(2).coeff(3) == 2);
    CHECK(ZPoly({1, 1}).str() == "z + 1");
}

TEST_CASE("bivariate monomials and row access") {
    BivariateSeries m = BivariateSeries::monomial(2, 3, 4, 8);
    CHECK(m.coeff(4).coeff(3) == 2);
    CHECK(m.coeff(0).is_zero());
    CHECK_THROWS_AS(m.coeff(9), DomainError);
    CHECK(m.min_degree() == 4);
}

TEST_CASE("two-variable partition product refines by part count") {
    // Row n of 1 / prod (1 - z q^j) counts partitions of n by length.
    BivariateSeries gf = pochhammer_z(1, 1, 1, 1, std::nullopt, 8).invert();
    const ZPoly& row5 = gf.coeff(5);
    CHECK(row5.coeff(0) == 0);
    CHECK(row5.coeff(1) == 1);
    CHECK(row5.coeff(2) == 2);
    CHECK(row5.coeff(3) == 2);
    CHECK(row5.coeff(4) == 1);
    CHECK(row5.coeff(5) == 1);
    CHECK(row5.value_at_one() == 7); // p(5)
}

TEST_CASE("signed staircase sum is supported on triangular degrees") {
    BivariateSeries s = sum_bivariate(10, 0, [](long long j) {
        if (tri(j) > 10) return BivariateSeries(10);
        return BivariateSeries::monomial(j % 2 == 0 ? 1 : -1,
                                         static_cast<int>(j),
                                         static_cast<int>(tri(j)), 10);
    });
    CHECK(s.coeff(6).coeff(3) == -1);
    CHECK(s.coeff(6).coeff(2) == 0);
    CHECK(s.coeff(7).is_zero());
    CHECK(s.coeff(10).coeff(4) == 1);
}

TEST_CASE("z binomials multiply in either form") {
    BivariateSeries a =
        BivariateSeries::constant(1, 6).times_z_binomial(1, 2);
    BivariateSeries b = pochhammer_z(-1, 1, 2, 1, 1, 6);
    CHECK(a == b); // both are 1 + z q^2
    BivariateSeries c =
        BivariateSeries::constant(1, 6).times_z_monomial_binomial(-1, 2, 4);
    CHECK(c.coeff(4).coeff(2) == -1);
    CHECK(c.z_cost() == 2);
}

TEST_CASE("embedding a z-free series keeps rows constant") {
    TruncatedSeries u = pochhammer(1, 1, 1, std::nullopt, 6);
    BivariateSeries b = BivariateSeries::from_series(u);
    for (int d = 0; d <= 6; ++d) {
        CHECK(b.coeff(d).coeff(0) == u.coeff(d));
        CHECK(b.coeff(d).degree() <= 0);
    }
}

TEST_CASE("inversion round-trips") {
    BivariateSeries s = pochhammer_z(-1, 1, 1, 1, 4, 10);
    CHECK(s * s.invert() == BivariateSeries::constant(1, 10));
    CHECK_THROWS_AS(BivariateSeries::monomial(1, 1, 0, 5).invert(),
                    NonInvertibleError);
}

TEST_CASE("q power substitution doubles the z cost") {
    BivariateSeries s = pochhammer_z(1, 1, 3, 1, 2, 5); // cost 3
    CHECK(s.z_cost() == 3);
    BivariateSeries sq = s.substitute_q_power(2);
    CHECK(sq.z_cost() == 6);
    CHECK(sq.order() == 11);
    CHECK(sq.coeff(6).coeff(1) == s.coeff(3).coeff(1));
}

TEST_CASE("negative z substitution needs enough cost") {
    BivariateSeries s = pochhammer_z(-1, 1, 2, 1, 3, 11); // factors from q^2: cost 2
    CHECK(s.z_cost() == 2);
    TruncatedSeries dropped = s.substitute_z(1, -1); // s = 1 < cost
    // (1+zq^2)(1+zq^3)(1+zq^4) at z = q^{-1}: (1+q)(1+q^2)(1+q^3)
    TruncatedSeries direct =
        pochhammer(-1, 1, 1, 3, dropped.order());
    CHECK(dropped == direct);
    CHECK_THROWS_AS(s.substitute_z(1, -2), DomainError); // s = 2 = cost
}

TEST_CASE("z evaluation collapses rows") {
    BivariateSeries s = pochhammer_z(-1, 1, 1, 1, 3, 8);
    TruncatedSeries plus = s.at_z(1);
    CHECK(plus == pochhammer(-1, 1, 1, 3, 8));
    TruncatedSeries minus = s.at_z(-1);
    CHECK(minus == pochhammer(1, 1, 1, 3, 8));
}

TEST_CASE("bivariate mismatch reports the first differing cell") {
    BivariateSeries a = pochhammer_z(1, 1, 1, 1, 2, 6);
    BivariateSeries b = a + BivariateSeries::monomial(1, 2, 4, 6);
    auto m = first_mismatch(a, b);
    REQUIRE(m.has_value());
    CHECK(m->q_degree == 4);
    CHECK(m->z_degree == 2);
    CHECK(m->rhs - m->lhs == 1);
    CHECK_FALSE(first_mismatch(a, a).has_value());
}

TEST_CASE("sum_bivariate rejects families that never leave the window") {
    CHECK_THROWS_AS(sum_bivariate(4, 0,
                                  [](long long) {
                                      return BivariateSeries::constant(1, 4);
                                  }),
                    DivergenceError);
}

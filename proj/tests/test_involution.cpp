#include "doctest.h"

#include <tuple>
#include <vector>

#include <partlab/errors.hpp>
#include <partlab/involution.hpp>

using namespace partlab;

namespace {
SignedTriple T(std::vector<int> lambda, std::vector<int> mu) {
    return SignedTriple{std::move(lambda), std::move(mu)};
}
} // namespace

TEST_CASE("kind names round-trip") {
    for (auto kind : {InvolutionKind::alpha, InvolutionKind::alpha1,
                      InvolutionKind::alpha2})
        CHECK(parse_kind(kind_name(kind)) == kind);
    CHECK_FALSE(parse_kind("beta").has_value());
}

TEST_CASE("weight adds a triangular contribution") {
    SignedTriple t = T({9, 6, 5, 2}, {6, 4, 4});
    CHECK(staircase_index(t) == 7);
    CHECK(triple_weight(t) == 9 + 6 + 5 + 2 + 6 + 4 + 4 + 28);
}

TEST_CASE("domain validation per kind") {
    CHECK_NOTHROW(validate_triple(InvolutionKind::alpha, T({3, 1, 0}, {2, 2, 0})));
    CHECK_THROWS_AS(validate_triple(InvolutionKind::alpha, T({}, {1})),
                    DomainError); // alpha needs a nonempty lambda
    CHECK_THROWS_AS(validate_triple(InvolutionKind::alpha, T({3, 3}, {})),
                    DomainError); // strictly decreasing
    CHECK_NOTHROW(validate_triple(InvolutionKind::alpha1, T({}, {2, 0})));
    CHECK_THROWS_AS(validate_triple(InvolutionKind::alpha1, T({2, 0}, {})),
                    DomainError); // alpha1 lambda entries are positive
    CHECK_NOTHROW(validate_triple(InvolutionKind::alpha2, T({2, 0}, {})));
    CHECK_THROWS_AS(validate_triple(InvolutionKind::alpha2, T({1}, {2, 3})),
                    DomainError); // mu weakly decreasing
}

TEST_CASE("the worked alpha step") {
    SignedTriple t = T({9, 6, 5, 2}, {6, 4, 4});
    CHECK(triple_sign(InvolutionKind::alpha, t) == -1);
    CHECK_FALSE(is_fixed(InvolutionKind::alpha, t));
    auto image = apply_involution(InvolutionKind::alpha, t);
    REQUIRE(image.has_value());
    CHECK(*image == T({6, 5, 2}, {9, 6, 4, 4}));
    CHECK(triple_sign(InvolutionKind::alpha, *image) == 1);
    auto back = apply_involution(InvolutionKind::alpha, *image);
    REQUIRE(back.has_value());
    CHECK(*back == t);
}

TEST_CASE("a fixed alpha point") {
    SignedTriple t = T({5}, {3, 2});
    CHECK(is_fixed(InvolutionKind::alpha, t));
    CHECK_FALSE(apply_involution(InvolutionKind::alpha, t).has_value());
    CHECK(triple_sign(InvolutionKind::alpha, t) == -1);
}

TEST_CASE("alpha1 moves with an empty lambda") {
    SignedTriple t = T({}, {3, 1});
    CHECK_FALSE(is_fixed(InvolutionKind::alpha1, t));
    auto image = apply_involution(InvolutionKind::alpha1, t);
    REQUIRE(image.has_value());
    CHECK(*image == T({3}, {1}));
    CHECK(triple_sign(InvolutionKind::alpha1, t) == 1);
    CHECK(triple_sign(InvolutionKind::alpha1, *image) == -1);
    CHECK(is_fixed(InvolutionKind::alpha1, T({}, {0, 0})));
    CHECK_FALSE(is_fixed(InvolutionKind::alpha1, T({}, {1})));
}

TEST_CASE("alpha2 moves at the back") {
    SignedTriple t = T({3, 1}, {4, 2});
    // lambda.back() = 1 <= mu.back() = 2: the 1 moves onto mu.
    auto image = apply_involution(InvolutionKind::alpha2, t);
    REQUIRE(image.has_value());
    CHECK(*image == T({3}, {4, 2, 1}));
    auto back = apply_involution(InvolutionKind::alpha2, *image);
    REQUIRE(back.has_value());
    CHECK(*back == t);
    CHECK(is_fixed(InvolutionKind::alpha2, T({2}, {})));
    CHECK(is_fixed(InvolutionKind::alpha2, T({0}, {3, 0})));
    CHECK_FALSE(is_fixed(InvolutionKind::alpha2, T({3, 1}, {4, 2})));
}

TEST_CASE("frozen per-weight harness rows") {
    using Row = std::tuple<long long, long long, long long>;
    auto check_rows = [](InvolutionKind kind, const std::vector<Row>& want) {
        HarnessReport rep = run_involution_harness(kind, 10, false);
        CHECK(rep.ok);
        REQUIRE(rep.rows.size() == want.size());
        for (std::size_t w = 0; w < want.size(); ++w) {
            CHECK(rep.rows[w].triples == std::get<0>(want[w]));
            CHECK(rep.rows[w].signed_sum == std::get<1>(want[w]));
            CHECK(rep.rows[w].fixed_sum == std::get<2>(want[w]));
            CHECK(rep.rows[w].structure_ok);
            CHECK(rep.rows[w].sums_ok);
        }
    };
    check_rows(InvolutionKind::alpha,
               {{0, 0, 0}, {1, 1, 1}, {1, -1, -1}, {2, 0, 0}, {4, 0, 0},
                {5, 1, 1}, {8, 0, 0}, {11, -1, -1}, {16, 0, 0}, {22, 0, 0},
                {30, 0, 0}});
    check_rows(InvolutionKind::alpha1,
               {{1, 1, 1}, {1, -1, -1}, {2, 0, 0}, {3, 1, 1}, {4, 0, 0},
                {6, 0, 0}, {9, -1, -1}, {12, 0, 0}, {16, 0, 0}, {22, 0, 0},
                {29, 1, 1}});
    check_rows(InvolutionKind::alpha2,
               {{0, 0, 0}, {1, 1, 1}, {1, -1, -1}, {2, 2, 2}, {4, 0, 0},
                {5, 1, 1}, {8, 0, 0}, {11, 3, 3}, {16, 2, 2}, {22, 2, 2},
                {30, 2, 2}});
}

TEST_CASE("triples enumerate in canonical order and stay in domain") {
    for (auto kind : {InvolutionKind::alpha, InvolutionKind::alpha1,
                      InvolutionKind::alpha2}) {
        for (long long w = 0; w <= 9; ++w) {
            auto triples = enumerate_triples(kind, w);
            for (std::size_t i = 0; i < triples.size(); ++i) {
                CHECK_NOTHROW(validate_triple(kind, triples[i]));
                CHECK(triple_weight(triples[i]) == w);
                if (i) {
                    auto key = [](const SignedTriple& t) {
                        return std::make_tuple(staircase_index(t),
                                               t.lambda.size(), t.lambda, t.mu);
                    };
                    CHECK(key(triples[i - 1]) < key(triples[i]));
                }
            }
        }
    }
}

TEST_CASE("apply is a sign-reversing involution on every small triple") {
    for (auto kind : {InvolutionKind::alpha, InvolutionKind::alpha1,
                      InvolutionKind::alpha2}) {
        for (long long w = 0; w <= 9; ++w) {
            for (const auto& t : enumerate_triples(kind, w)) {
                auto image = apply_involution(kind, t);
                if (!image) {
                    CHECK(is_fixed(kind, t));
                    continue;
                }
                CHECK(triple_weight(*image) == w);
                CHECK(staircase_index(*image) == staircase_index(t));
                CHECK(triple_sign(kind, *image) == -triple_sign(kind, t));
                auto back = apply_involution(kind, *image);
                REQUIRE(back.has_value());
                CHECK(*back == t);
            }
        }
    }
}

TEST_CASE("z-refined harness passes through weight 12") {
    for (auto kind : {InvolutionKind::alpha, InvolutionKind::alpha1,
                      InvolutionKind::alpha2}) {
        HarnessReport rep = run_involution_harness(kind, 12, true);
        CHECK(rep.ok);
        CHECK(rep.first_problem.empty());
        for (const auto& row : rep.rows) CHECK(row.refined_ok);
    }
}

TEST_CASE("harness rejects infeasible weights") {
    CHECK_THROWS_AS(run_involution_harness(InvolutionKind::alpha, 61, false),
                    FeasibilityError);
    CHECK_THROWS_AS(run_involution_harness(InvolutionKind::alpha, -1, false),
                    DomainError);
}

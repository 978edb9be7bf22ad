#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/series.hpp"
#include "partlab/zpoly.hpp"

namespace partlab {

// Formal power series in q whose coefficients are polynomials in z,
// truncated after q^order. Alongside the truncation order each series
// carries a "z cost" w: a certified lower bound stating that every
// monomial z^m q^e of the full (untruncated) series satisfies
// e >= w * m. The cost makes substitutions z -> c * q^(-s) sound:
// knowing how much q-degree each power of z must carry bounds how far
// the unknown tail can reach down after the substitution.
class BivariateSeries {
public:
    // z cost of a series with no z at all (every z power is
    // impossible, so the bound is vacuous at "infinity").
    static const int kUnboundedZCost;

    // The zero series with the given order (order >= 0).
    explicit BivariateSeries(int order);

    static BivariateSeries constant(BigInt c, int order);
    // c * z^z_deg * q^q_deg with z_deg, q_deg >= 0.
    static BivariateSeries monomial(BigInt c, int z_deg, int q_deg, int order);
    // Embed a z-free series.
    static BivariateSeries from_series(const TruncatedSeries& s);

    int order() const noexcept { return order_; }
    int z_cost() const noexcept { return z_cost_; }

    // Coefficient of q^d (a polynomial in z); throws DomainError
    // outside 0 <= d <= order.
    const ZPoly& coeff(int d) const;

    // Lowest q-degree with a nonzero coefficient, or nullopt.
    std::optional<int> min_degree() const;

    BivariateSeries truncated(int new_order) const;

    BivariateSeries operator+(const BivariateSeries& other) const;
    BivariateSeries operator-(const BivariateSeries& other) const;
    BivariateSeries operator*(const BivariateSeries& other) const;

    // Inverse; requires the q^0 coefficient to be the constant
    // polynomial +1 or -1, else throws NonInvertibleError.
    BivariateSeries invert() const;

    // Multiply by (1 + a z q^j), j >= 0. The z cost becomes
    // min(z_cost, j).
    BivariateSeries times_z_binomial(const BigInt& a, int j) const;

    // Multiply by (1 + a z^z_deg q^q_deg), z_deg >= 1, q_deg >= 0.
    // The z cost becomes min(z_cost, floor(q_deg / z_deg)).
    BivariateSeries times_z_monomial_binomial(const BigInt& a, int z_deg,
                                              int q_deg) const;

    // Multiply by the z-free binomial (1 + a q^j), j >= 1.
    BivariateSeries times_binomial(const BigInt& a, int j) const;

    // q -> q^k (k >= 1): order becomes k*order + k - 1 and the z cost
    // multiplies by k.
    BivariateSeries substitute_q_power(int k) const;

    // z -> c * q^e. For e >= 0 the result keeps this order. For
    // e = -s < 0 the z cost w must exceed s (else DomainError): each
    // z^m q^d monomial lands at q^(d - s*m) >= q^(d * (w-s)/w), so the
    // result is exact through order ceil((order+1)*(w-s)/w) - 1.
    TruncatedSeries substitute_z(const BigInt& c, int e) const;

    // z -> constant (substitute_z with e = 0).
    TruncatedSeries at_z(const BigInt& c) const;

    std::string str() const;

private:
    BivariateSeries(int order, int z_cost, std::vector<ZPoly> coeffs);
    static int combined_cost(int a, int b) noexcept;

    int order_ = 0;
    int z_cost_ = 0;
    std::vector<ZPoly> coeffs_; // size order_ + 1
};

// Equal through the smaller of the two orders (full ZPoly equality at
// each degree).
bool operator==(const BivariateSeries& lhs, const BivariateSeries& rhs);
inline bool operator!=(const BivariateSeries& lhs, const BivariateSeries& rhs) {
    return !(lhs == rhs);
}

struct BivariateMismatch {
    int q_degree = 0;
    int z_degree = 0;
    BigInt lhs;
    BigInt rhs;
};

// Lowest (q_degree, z_degree) where the two differ.
std::optional<BivariateMismatch> first_mismatch(const BivariateSeries& lhs,
                                                const BivariateSeries& rhs);

// Product of (1 - base_sign * z^z_deg * q^(j + i*step)) for i = 0, 1, ...
// count = nullopt means infinite, requiring j >= 1. z_deg >= 1.
BivariateSeries pochhammer_z(int base_sign, int z_deg, int j, int step,
                             std::optional<long long> count, int order);

// Bivariate analogue of sum_series with the same termination contract.
BivariateSeries sum_bivariate(
    int order, long long n0,
    const std::function<BivariateSeries(long long)>& term);

} // namespace partlab

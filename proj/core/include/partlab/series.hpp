#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

// Formal power series in q with BigInt coefficients, truncated after
// q^order. All arithmetic is exact through the truncation order;
// operations on series of different orders are exact through the
// smaller order and truncate the result there.
class TruncatedSeries {
public:
    // The zero series with the given order (order >= 0).
    explicit TruncatedSeries(int order);

    static TruncatedSeries constant(BigInt c, int order);
    // c * q^degree, with 0 <= degree. Terms beyond the order vanish.
    static TruncatedSeries monomial(BigInt c, int degree, int order);
    // coefficients[d] is the coefficient of q^d; order = size - 1.
    static TruncatedSeries from_coefficients(std::vector<BigInt> coefficients);

    int order() const noexcept { return order_; }
    // Coefficient of q^d for 0 <= d <= order; throws DomainError outside.
    const BigInt& coeff(int d) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    // Degree of the lowest nonzero coefficient, or nullopt if the
    // series is zero through its order.
    std::optional<int> min_degree() const;

    // Copy truncated to new_order <= order().
    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const BigInt& scalar) const;

    // Multiplicative inverse; requires constant term +1 or -1
    // (all intermediate coefficients stay integral), else throws
    // NonInvertibleError.
    TruncatedSeries invert() const;

    // Multiply by the binomial (1 + a q^j), j >= 1, in place-free form.
    TruncatedSeries times_binomial(const BigInt& a, int j) const;

    // q -> -q.
    TruncatedSeries substitute_q_negate() const;

    // q -> q^k (k >= 1). The result has order k*order() + k - 1: every
    // coefficient through that degree is known exactly.
    TruncatedSeries substitute_q_power(int k) const;

    std::string str() const;

private:
    int order_ = 0;
    std::vector<BigInt> coeffs_; // size order_  + 1
};

// Equal through the smaller of the two orders.
bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
inline bool operator!=(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return !(lhs == rhs);
}

struct SeriesMismatch {
    int degree = 0;
    BigInt lhs;
    BigInt rhs;
};

// Lowest degree (through the smaller order) where the two differ.
std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& lhs,
                                             const TruncatedSeries& rhs);

// Product of binomials (1 - base_sign * q^(j + i*step)) for
// i = 0, 1, 2, ... Finite products take count factors; count = nullopt
// means the infinite product, which requires j >= 1 so that only
// finitely many factors touch degrees <= order. base_sign must be +1
// (ordinary Pochhammer) or -1 (factors 1 + q^...); step >= 1.
TruncatedSeries pochhammer(int base_sign, int j, int step,
                           std::optional<long long> count, int order);

// Sum of term(n) for n = n0, n0+1, ... Stops once term(n) has no
// coefficient at degree <= order. A term may be entirely zero (or
// vanish through the order) only finitely often: after
// 10*sqrt(order)+10 consecutive such terms the sum throws
// DivergenceError rather than loop forever.
TruncatedSeries sum_series(int order, long long n0,
                           const std::function<TruncatedSeries(long long)>& term);

} // namespace partlab

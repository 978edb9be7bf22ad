#include "partlab/series.hpp"

#include <algorithm>
#include <sstream>

#include "partlab/errors.hpp"

namespace partlab {

namespace {

int isqrt_floor(int n) {
    int k = 0;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::constant(BigInt c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(BigInt c, int degree, int order) {
    if (degree < 0) throw DomainError("monomial degree must be nonnegative");
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<BigInt> coefficients) {
    if (coefficients.empty())
        throw DomainError("a series needs at least the q^0 coefficient");
    TruncatedSeries s(static_cast<int>(coefficients.size()) - 1);
    s.coeffs_ = std::move(coefficients);
    return s;
}

const BigInt& TruncatedSeries::coeff(int d) const {
    if (d < 0 || d > order_)
        throw DomainError("coefficient degree outside the truncation order");
    return coeffs_[static_cast<std::size_t>(d)];
}

std::optional<int> TruncatedSeries::min_degree() const {
    for (int d = 0; d <= order_; ++d)
        if (coeffs_[static_cast<std::size_t>(d)] != 0) return d;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_)
        throw DomainError("truncation order must lie within the current order");
    TruncatedSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    TruncatedSeries s(std::min(order_, other.order_));
    for (int d = 0; d <= s.order_; ++d)
        s.coeffs_[static_cast<std::size_t>(d)] =
            coeffs_[static_cast<std::size_t>(d)] +
            other.coeffs_[static_cast<std::size_t>(d)];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    TruncatedSeries s(std::min(order_, other.order_));
    for (int d = 0; d <= s.order_; ++d)
        s.coeffs_[static_cast<std::size_t>(d)] =
            coeffs_[static_cast<std::size_t>(d)] -
            other.coeffs_[static_cast<std::size_t>(d)];
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(order_);
    for (int d = 0; d <= order_; ++d)
        s.coeffs_[static_cast<std::size_t>(d)] = -coeffs_[static_cast<std::size_t>(d)];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    TruncatedSeries s(std::min(order_, other.order_));
    for (int i = 0; i <= s.order_; ++i) {
        const BigInt& a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= s.order_; ++j) {
            const BigInt& b = other.coeffs_[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            s.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const BigInt& scalar) const {
    TruncatedSeries s(order_);
    for (int d = 0; d <= order_; ++d)
        s.coeffs_[static_cast<std::size_t>(d)] =
            coeffs_[static_cast<std::size_t>(d)] * scalar;
    return s;
}

TruncatedSeries TruncatedSeries::invert() const {
    const BigInt& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw NonInvertibleError(
            "series inversion requires constant term +1 or -1");
    TruncatedSeries s(order_);
    s.coeffs_[0] = c0;
    for (int n = 1; n <= order_; ++n) {
        BigInt acc = 0;
        for (int i = 1; i <= n; ++i) {
            const BigInt& a = coeffs_[static_cast<std::size_t>(i)];
            if (a != 0) acc += a * s.coeffs_[static_cast<std::size_t>(n - i)];
        }
        s.coeffs_[static_cast<std::size_t>(n)] = -c0 * acc;
    }
    return s;
}

TruncatedSeries TruncatedSeries::times_binomial(const BigInt& a, int j) const {
    if (j < 0) throw DomainError("binomial exponent must be nonnegative");
    TruncatedSeries s = *this;
    if (j == 0) {
        for (auto& c : s.coeffs_) c += a * c;
        return s;
    }
    for (int d = order_; d >= j; --d)
        s.coeffs_[static_cast<std::size_t>(d)] +=
            a * coeffs_[static_cast<std::size_t>(d - j)];
    return s;
}

TruncatedSeries TruncatedSeries::substitute_q_negate() const {
    TruncatedSeries s = *this;
    for (int d = 1; d <= order_; d += 2)
        s.coeffs_[static_cast<std::size_t>(d)] = -s.coeffs_[static_cast<std::size_t>(d)];
    return s;
}

TruncatedSeries TruncatedSeries::substitute_q_power(int k) const {
    if (k < 1) throw DomainError("power substitution needs k >= 1");
    // The image's unknown tail starts at k*(order+1), so every degree
    // through k*order + k - 1 is exact.
    TruncatedSeries s(order_ * k + k - 1);
    for (int d = 0; d <= order_; ++d)
        s.coeffs_[static_cast<std::size_t>(d) * static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(d)];
    return s;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= order_; ++d) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || mag != 1) out << mag.str();
        if (d >= 1) {
            out << "q";
            if (d > 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << order_ + 1 << ")";
    return out.str();
}

bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return !first_mismatch(lhs, rhs).has_value();
}

std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& lhs,
                                             const TruncatedSeries& rhs) {
    int n = std::min(lhs.order(), rhs.order());
    for (int d = 0; d <= n; ++d)
        if (lhs.coeff(d) != rhs.coeff(d))
            return SeriesMismatch{d, lhs.coeff(d), rhs.coeff(d)};
    return std::nullopt;
}

TruncatedSeries pochhammer(int base_sign, int j, int step,
                           std::optional<long long> count, int order) {
    if (base_sign != 1 && base_sign != -1)
        throw DomainError("pochhammer base sign must be +1 or -1");
    if (step < 1) throw DomainError("pochhammer step must be positive");
    if (j < 0) throw DomainError("pochhammer start exponent must be nonnegative");
    if (!count && j < 1)
        throw DomainError("infinite pochhammer products need start exponent >= 1");
    if (count && *count < 0)
        throw DomainError("pochhammer factor count must be nonnegative");

    TruncatedSeries s = TruncatedSeries::constant(1, order);
    for (long long i = 0; !count || i < *count; ++i) {
        long long e = j + i * step;
        // Factors beyond the order are 1 + O(q^{order+1}); they cannot
        // change any stored coefficient.
        if (e > order) break;
        s = s.times_binomial(-base_sign, static_cast<int>(e));
    }
    return s;
}

TruncatedSeries sum_series(int order, long long n0,
                           const std::function<TruncatedSeries(long long)>& term) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    TruncatedSeries total(order);
    // Our summand families have minimal degrees that never decrease, so
    // a long run of terms contributing nothing below the truncation
    // order means the sum has left the window for good. The run length
    // tolerates families indexed sparsely (q^{n^2}-type leading terms).
    const long long streak_limit = 10LL * isqrt_floor(order) + 10;
    const long long term_limit = 50LL * (order + 1) + 1000;
    long long streak = 0;
    long long evaluated = 0;
    for (long long n = n0;; ++n) {
        TruncatedSeries t = term(n);
        if (t.order() < order)
            throw DomainError("summand was built below the requested order");
        if (++evaluated > term_limit)
            throw DivergenceError(
                "sum does not leave the truncation window; its tail "
                "cannot be discarded at this order");
        std::optional<int> md = t.min_degree();
        if (md.has_value() && *md <= order) {
            streak = 0;
            total = total + t;
        } else {
            if (++streak >= streak_limit) break;
        }
    }
    return total;
}

} // namespace partlab

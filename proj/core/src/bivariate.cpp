#include "partlab/bivariate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "partlab/errors.hpp"

namespace partlab {

const int BivariateSeries::kUnboundedZCost = std::numeric_limits<int>::max();

namespace {

int isqrt_floor(int n) {
    int k = 0;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

BigInt int_pow(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

BivariateSeries::BivariateSeries(int order, int z_cost, std::vector<ZPoly> coeffs)
    : order_(order), z_cost_(z_cost), coeffs_(std::move(coeffs)) {}

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    z_cost_ = kUnboundedZCost;
    coeffs_.assign(static_cast<std::size_t>(order) + 1, ZPoly());
}

BivariateSeries BivariateSeries::constant(BigInt c, int order) {
    BivariateSeries s(order);
    s.coeffs_[0] = ZPoly::monomial(std::move(c), 0);
    return s;
}

BivariateSeries BivariateSeries::monomial(BigInt c, int z_deg, int q_deg, int order) {
    if (z_deg < 0 || q_deg < 0)
        throw DomainError("monomial degrees must be nonnegative");
    BivariateSeries s(order);
    if (z_deg > 0 && c != 0) s.z_cost_ = q_deg / z_deg;
    if (q_deg <= order)
        s.coeffs_[static_cast<std::size_t>(q_deg)] = ZPoly::monomial(std::move(c), z_deg);
    return s;
}

BivariateSeries BivariateSeries::from_series(const TruncatedSeries& s) {
    BivariateSeries out(s.order());
    for (int d = 0; d <= s.order(); ++d)
        out.coeffs_[static_cast<std::size_t>(d)] = ZPoly::monomial(s.coeff(d), 0);
    return out;
}

const ZPoly& BivariateSeries::coeff(int d) const {
    if (d < 0 || d > order_)
        throw DomainError("coefficient degree outside the truncation order");
    return coeffs_[static_cast<std::size_t>(d)];
}

std::optional<int> BivariateSeries::min_degree() const {
    for (int d = 0; d <= order_; ++d)
        if (!coeffs_[static_cast<std::size_t>(d)].is_zero()) return d;
    return std::nullopt;
}

BivariateSeries BivariateSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_)
        throw DomainError("truncation order must lie within the current order");
    std::vector<ZPoly> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return BivariateSeries(new_order, z_cost_, std::move(c));
}

int BivariateSeries::combined_cost(int a, int b) noexcept {
    return std::min(a, b);
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    std::vector<ZPoly> c(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d)
        c[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)] +
                                         other.coeffs_[static_cast<std::size_t>(d)];
    return BivariateSeries(n, combined_cost(z_cost_, other.z_cost_), std::move(c));
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& other) const {
    int n = std::min(order_, other.order_);
    std::vector<ZPoly> c(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d)
        c[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)] -
                                         other.coeffs_[static_cast<std::size_t>(d)];
    return BivariateSeries(n, combined_cost(z_cost_, other.z_cost_), std::move(c));
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const {
    // A product monomial z^{m1+m2} q^{e1+e2} inherits
    // e1+e2 >= w1*m1 + w2*m2 >= min(w1,w2)*(m1+m2).
    int n = std::min(order_, other.order_);
    std::vector<ZPoly> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const ZPoly& a = coeffs_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            const ZPoly& b = other.coeffs_[static_cast<std::size_t>(j)];
            if (b.is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return BivariateSeries(n, combined_cost(z_cost_, other.z_cost_), std::move(c));
}

BivariateSeries BivariateSeries::invert() const {
    const ZPoly& c0 = coeffs_[0];
    if (c0.degree() != 0 || (c0.coeff(0) != 1 && c0.coeff(0) != -1))
        throw NonInvertibleError(
            "bivariate inversion requires constant q^0 coefficient +1 or -1");
    BigInt u = c0.coeff(0);
    // 1/(u(1+B)) = u(1 - B + B^2 - ...): every monomial of each B^k
    // already satisfies the cost bound, so the inverse keeps it.
    std::vector<ZPoly> c(static_cast<std::size_t>(order_) + 1);
    c[0] = ZPoly::monomial(u, 0);
    for (int n = 1; n <= order_; ++n) {
        ZPoly acc;
        for (int i = 1; i <= n; ++i) {
            const ZPoly& a = coeffs_[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            acc += a * c[static_cast<std::size_t>(n - i)];
        }
        c[static_cast<std::size_t>(n)] = acc * BigInt(-u);
    }
    return BivariateSeries(order_, z_cost_, std::move(c));
}

BivariateSeries BivariateSeries::times_z_binomial(const BigInt& a, int j) const {
    return times_z_monomial_binomial(a, 1, j);
}

BivariateSeries BivariateSeries::times_z_monomial_binomial(const BigInt& a, int z_deg,
                                                           int q_deg) const {
    if (z_deg < 1) throw DomainError("z-binomial needs z degree >= 1");
    if (q_deg < 0) throw DomainError("z-binomial needs q degree >= 0");
    // New monomials z^{m+z_deg} q^{e+q_deg}: with w' = min(w, q_deg/z_deg),
    // e + q_deg >= w*m + w'*z_deg >= w'*(m + z_deg).
    std::vector<ZPoly> c = coeffs_;
    for (int d = order_; d >= q_deg; --d) {
        const ZPoly& src = coeffs_[static_cast<std::size_t>(d - q_deg)];
        if (src.is_zero()) continue;
        c[static_cast<std::size_t>(d)] += (src * a).shifted(z_deg);
    }
    return BivariateSeries(order_, combined_cost(z_cost_, q_deg / z_deg), std::move(c));
}

BivariateSeries BivariateSeries::times_binomial(const BigInt& a, int j) const {
    if (j < 1) throw DomainError("binomial exponent must be positive");
    std::vector<ZPoly> c = coeffs_;
    for (int d = order_; d >= j; --d) {
        const ZPoly& src = coeffs_[static_cast<std::size_t>(d - j)];
        if (src.is_zero()) continue;
        c[static_cast<std::size_t>(d)] += src * a;
    }
    return BivariateSeries(order_, z_cost_, std::move(c));
}

BivariateSeries BivariateSeries::substitute_q_power(int k) const {
    if (k < 1) throw DomainError("power substitution needs k >= 1");
    int n = order_ * k + k - 1;
    std::vector<ZPoly> c(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= order_; ++d)
        c[static_cast<std::size_t>(d) * static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(d)];
    int w = z_cost_ == kUnboundedZCost ? kUnboundedZCost : z_cost_ * k;
    return BivariateSeries(n, w, std::move(c));
}

TruncatedSeries BivariateSeries::substitute_z(const BigInt& c, int e) const {
    int result_order;
    if (e >= 0 || z_cost_ == kUnboundedZCost) {
        // Nonnegative shifts never pull tail monomials below the
        // window; an unbounded cost certifies the series is z-free.
        result_order = order_;
    } else {
        int s = -e;
        long long w = z_cost_;
        if (s >= w)
            throw DomainError(
                "substituting z -> c*q^-" + std::to_string(s) +
                " needs every z to carry more than that much q-degree "
                "(z cost " + std::to_string(z_cost_) + " is insufficient)");
        // Tail monomials (q-degree d > order) land at
        // d - s*m >= d*(w-s)/w > order*(w-s)/w, so everything through
        // ceil((order+1)*(w-s)/w) - 1 is exact.
        long long num = (static_cast<long long>(order_) + 1) * (w - s);
        result_order = static_cast<int>((num + w - 1) / w) - 1;
    }

    TruncatedSeries out(result_order);
    std::vector<BigInt> acc(static_cast<std::size_t>(result_order) + 1, BigInt(0));
    for (int d = 0; d <= order_; ++d) {
        const ZPoly& poly = coeffs_[static_cast<std::size_t>(d)];
        for (int m = 0; m <= poly.degree(); ++m) {
            BigInt v = poly.coeff(m);
            if (v == 0) continue;
            long long target = d + static_cast<long long>(e) * m;
            if (target < 0)
                throw DomainError(
                    "z-substitution produced a negative q-degree; the "
                    "stored z cost bound was violated");
            if (target > result_order) continue;
            acc[static_cast<std::size_t>(target)] += v * int_pow(c, m);
        }
    }
    return TruncatedSeries::from_coefficients(std::move(acc));
}

TruncatedSeries BivariateSeries::at_z(const BigInt& c) const {
    return substitute_z(c, 0);
}

std::string BivariateSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= order_; ++d) {
        const ZPoly& p = coeffs_[static_cast<std::size_t>(d)];
        if (p.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << p.str() << ")";
        if (d >= 1) {
            out << "q";
            if (d > 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << order_ + 1 << ")";
    return out.str();
}

bool operator==(const BivariateSeries& lhs, const BivariateSeries& rhs) {
    return !first_mismatch(lhs, rhs).has_value();
}

std::optional<BivariateMismatch> first_mismatch(const BivariateSeries& lhs,
                                                const BivariateSeries& rhs) {
    int n = std::min(lhs.order(), rhs.order());
    for (int d = 0; d <= n; ++d) {
        const ZPoly& a = lhs.coeff(d);
        const ZPoly& b = rhs.coeff(d);
        if (a == b) continue;
        int top = std::max(a.degree(), b.degree());
        for (int m = 0; m <= top; ++m)
            if (a.coeff(m) != b.coeff(m))
                return BivariateMismatch{d, m, a.coeff(m), b.coeff(m)};
    }
    return std::nullopt;
}

BivariateSeries pochhammer_z(int base_sign, int z_deg, int j, int step,
                             std::optional<long long> count, int order) {
    if (base_sign != 1 && base_sign != -1)
        throw DomainError("pochhammer base sign must be +1 or -1");
    if (z_deg < 1) throw DomainError("pochhammer z degree must be positive");
    if (step < 1) throw DomainError("pochhammer step must be positive");
    if (j < 0) throw DomainError("pochhammer start exponent must be nonnegative");
    if (!count && j < 1)
        throw DomainError("infinite pochhammer products need start exponent >= 1");
    if (count && *count < 0)
        throw DomainError("pochhammer factor count must be nonnegative");

    BivariateSeries s = BivariateSeries::constant(1, order);
    for (long long i = 0; !count || i < *count; ++i) {
        long long e = j + i * step;
        if (e > order) {
            // This factor (and all later ones) touches no stored
            // coefficient, but the true product still contains its
            // z-monomials, so fold its cost in before stopping. Using
            // a clamped exponent only lowers (never raises) the bound.
            long long clamped = std::min<long long>(e, std::numeric_limits<int>::max() / 2);
            s = s.times_z_monomial_binomial(-base_sign, z_deg, static_cast<int>(clamped));
            break;
        }
        s = s.times_z_monomial_binomial(-base_sign, z_deg, static_cast<int>(e));
    }
    return s;
}

BivariateSeries sum_bivariate(
    int order, long long n0,
    const std::function<BivariateSeries(long long)>& term) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    // Termination mirrors sum_series. The z cost of the result is the
    // minimum over the evaluated terms; the summand families used here
    // keep later terms at or above that bound (their costs are set by
    // fixed low-exponent factors or grow with the index), so the bound
    // remains valid for the full sum's tail.
    BivariateSeries total(order);
    const long long streak_limit = 10LL * isqrt_floor(order) + 10;
    const long long term_limit = 50LL * (order + 1) + 1000;
    long long streak = 0;
    long long evaluated = 0;
    for (long long n = n0;; ++n) {
        BivariateSeries t = term(n);
        if (t.order() < order)
            throw DomainError("summand was built below the requested order");
        if (++evaluated > term_limit)
            throw DivergenceError(
                "sum does not leave the truncation window; its tail "
                "cannot be discarded at this order");
        // Adding a term that is zero through the window changes no
        // coefficient but still folds its z cost into the result: its
        // monomials beyond the window belong to the true sum.
        std::optional<int> md = t.min_degree();
        total = total + t;
        if (md.has_value() && *md <= order) {
            streak = 0;
        } else {
            if (++streak >= streak_limit) break;
        }
    }
    return total;
}

} // namespace partlab

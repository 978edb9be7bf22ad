#include "partlab/identities.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "partlab/bivariate.hpp"
#include "partlab/concave.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"
#include "partlab/stats.hpp"

namespace partlab {

namespace {

using TS = TruncatedSeries;
using BS = BivariateSeries;

long long tri(long long n) { return n * (n + 1) / 2; }
long long pent(long long n) { return n * (3 * n - 1) / 2; }
int alt(long long n) { return n % 2 == 0 ? 1 : -1; } // (-1)^n for n >= 0

TS zero_ts(int order) { return TS(order); }

// c * q^e, or zero when the exponent is past the window. Keeping the
// guard here lets summand lambdas bail out before building any
// pochhammer factors.
TS mono_at(BigInt c, long long e, int order) {
    if (e > order) return TS(order);
    return TS::monomial(std::move(c), static_cast<int>(e), order);
}

// ---- recurring builders ----

TS qq_inf(int order) { return pochhammer(1, 1, 1, std::nullopt, order); }
TS partition_gf(int order) { return qq_inf(order).invert(); }
TS mq_inf(int order) { return pochhammer(-1, 1, 1, std::nullopt, order); }

TS mock_f(int order) {
    return sum_series(order, 0, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        TS d = pochhammer(-1, 1, 1, n, order);
        return mono_at(1, n * n, order) * (d * d).invert();
    });
}

TS mock_phi(int order) {
    return sum_series(order, 0, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               pochhammer(-1, 2, 2, n, order).invert();
    });
}

TS mock_psi(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               pochhammer(1, 1, 2, n, order).invert();
    });
}

TS pentagonal_block(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (pent(n) > order) return zero_ts(order);
        return mono_at(1, pent(n), order) - mono_at(1, pent(n) + n, order);
    });
}

// Sum of (-1)^(n-1) q^(T_n), n >= 1.
TS alternating_triangular(int order) {
    return sum_series(order, 1, [&](long long n) {
        return mono_at(-alt(n), tri(n), order);
    });
}

// Sum of (-1)^n q^(T_n), n >= 0.
TS alternating_triangular_from_zero(int order) {
    return sum_series(order, 0, [&](long long n) {
        return mono_at(alt(n), tri(n), order);
    });
}

// ---- per-identity series (named by the registry case they serve) ----

TS lhs_thm21(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        TS den = pochhammer(1, 1, 1, n - 1, order)
                     .times_binomial(1, static_cast<int>(n));
        return mono_at(1, n * n, order) *
               pochhammer(1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               den.invert();
    });
}

TS rhs_thm21(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (tri(n) > order) return zero_ts(order);
        return mono_at(-alt(n), tri(n), order) *
               pochhammer(-1, 1, 1, n, order).invert();
    });
}

BS lhs_cor22a(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        TS den = pochhammer(1, 1, 1, n - 1, order)
                     .times_binomial(1, static_cast<int>(n));
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(den.invert());
    });
}

BS rhs_cor22a(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (tri(n) > order) return BS(order);
        return BS::monomial(-alt(n), static_cast<int>(n),
                            static_cast<int>(tri(n)), order) *
               BS::from_series(pochhammer(-1, 1, 1, n, order).invert());
    });
}

BS lhs_cor22b(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(1, 1, 1, n - 1, order).invert()) *
               pochhammer_z(-1, 1, static_cast<int>(n), 1, 1, order).invert();
    });
}

BS rhs_cor22b(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (tri(n) > order) return BS(order);
        return BS::monomial(-alt(n), static_cast<int>(n),
                            static_cast<int>(tri(n)), order) *
               pochhammer_z(-1, 1, 1, 1, n, order).invert();
    });
}

TS rhs_eq26(int order) {
    return sum_series(order, 1, [&](long long n) {
        long long e = 2 * n * n - n;
        if (e > order) return zero_ts(order);
        TS den = pochhammer(1, 1, 1, 2 * n - 1, order)
                     .times_binomial(1, static_cast<int>(2 * n));
        return mono_at(1, e, order) * den.invert();
    });
}

TS lhs_eq27(int order) {
    return mq_inf(order) * (-mock_psi(order).substitute_q_negate());
}

TS rhs_eq27a(int order) {
    return sum_series(order, 1, [&](long long n) {
        long long e = 2 * n * n - n;
        if (e > order) return zero_ts(order);
        TS den = pochhammer(1, 1, 1, 2 * n - 1, order)
                     .times_binomial(1, static_cast<int>(2 * n - 1));
        return mono_at(1, e, order) * den.invert();
    });
}

TS rhs_eq27b(int order) {
    return sum_series(order, 1, [&](long long n) {
        long long e = 2 * n * n - n;
        if (e > order) return zero_ts(order);
        TS den = pochhammer(1, 1, 1, 2 * n - 2, order)
                     .times_binomial(-1, static_cast<int>(4 * n - 2));
        return mono_at(1, e, order) * den.invert();
    });
}

TS lhs_cor24(int order) {
    TS phi = mock_phi(order).substitute_q_negate();
    TS psi = mock_psi(order).substitute_q_negate();
    return mq_inf(order) * (phi - psi * BigInt(2) - TS::constant(1, order));
}

TS rhs_cor24(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n > order) return zero_ts(order);
        return mono_at(-alt(n), n, order) *
               pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order);
    });
}

TS lhs_lem32(int order) {
    return sum_series(order, 0, [&](long long n) {
        if (n * n + n > order) return zero_ts(order);
        TS d = pochhammer(1, 1, 1, n, order);
        return mono_at(1, n * n + n, order) * (d * d).invert();
    });
}

TS lhs_lem32_cleared(int order) {
    return sum_series(order, 0, [&](long long n) {
        if (n * n + n > order) return zero_ts(order);
        return mono_at(1, n * n + n, order) *
               pochhammer(1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               pochhammer(1, 1, 1, n, order).invert();
    });
}

BS lhs_thm33(int order) {
    return sum_bivariate(order, 0, [&](long long n) {
        if (n * n + n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n + n), order) *
               pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(1, 1, 1, n, order).invert());
    });
}

BS rhs_thm33(int order) {
    return sum_bivariate(order, 0, [&](long long j) {
        if (tri(j) > order) return BS(order);
        return BS::monomial(alt(j), static_cast<int>(j),
                            static_cast<int>(tri(j)), order);
    });
}

TS lhs_thm34(int order) {
    return sum_series(order, 0, [&](long long n) {
        long long e = n * (2 * n + 1);
        if (e > order) return zero_ts(order);
        return mono_at(1, e, order) * pochhammer(1, 1, 1, 2 * n, order).invert();
    });
}

TS rhs_thm34(int order) {
    return mq_inf(order) * sum_series(order, 0, [&](long long j) {
               return mono_at(alt(j), j * j, order);
           });
}

TS lhs_cor35a(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               (pochhammer(1, 1, 1, n - 1, order) * pochhammer(1, 1, 1, n, order))
                   .invert();
    });
}

TS lhs_cor35a_cleared(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               pochhammer(1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               pochhammer(1, 1, 1, n - 1, order).invert();
    });
}

BS lhs_cor35b(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(1, 1, 1, n - 1, order).invert());
    });
}

BS rhs_cor35b(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (tri(n) > order) return BS(order);
        return BS::monomial(-alt(n), static_cast<int>(n),
                            static_cast<int>(tri(n)), order);
    });
}

BS lhs_cor36(int order) {
    return sum_bivariate(order, 0, [&](long long n) {
        if (n * n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(1, 1, 1, 1, n, order).invert() *
               BS::from_series(pochhammer(1, 1, 1, n, order).invert());
    });
}

BS rhs_cor36(int order) {
    return pochhammer_z(1, 1, 1, 1, std::nullopt, order).invert();
}

TS lhs_thm37(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               pochhammer(-1, 1, 1, n, order).invert();
    });
}

TS rhs_thm37(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n > order) return zero_ts(order);
        return mono_at(-alt(n), n, order) *
               pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order);
    });
}

TS lhs_cor39a(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n + n > order) return zero_ts(order);
        TS d = pochhammer(-1, 1, 1, n, order);
        return mono_at(1, n * n + n, order) * (d * d).invert();
    });
}

TS lhs_cor39a_cleared(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n + n > order) return zero_ts(order);
        return mono_at(1, n * n + n, order) *
               pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               pochhammer(-1, 1, 1, n, order).invert();
    });
}

// Inner alternating tail used on the right of cor3.9a (and its
// z-refinement cor3.9s2 at z = 1).
TS cor39a_inner(long long k, int order) {
    long long base = k * (k - 1) / 2 + k;
    if (base + 1 > order) return zero_ts(order);
    return sum_series(order, 1, [&, base](long long n) {
        if (base + n > order) return zero_ts(order);
        return mono_at(-alt(n), base + n, order) *
               pochhammer(-1, static_cast<int>(k + n) + 1, 1, std::nullopt, order);
    });
}

TS cor39a_bracket(int order) {
    return sum_series(order, 1,
                      [&](long long k) { return cor39a_inner(k, order); });
}

TS lhs_cor39b(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               (pochhammer(-1, 1, 1, n - 1, order) * pochhammer(-1, 1, 1, n, order))
                   .invert();
    });
}

TS lhs_cor39b_cleared(int order) {
    return sum_series(order, 1, [&](long long n) {
        if (n * n > order) return zero_ts(order);
        return mono_at(1, n * n, order) *
               pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               pochhammer(-1, 1, 1, n - 1, order).invert();
    });
}

TS cor39b_inner(long long k, int order) {
    long long base = k * (k + 1) / 2 + k + 1;
    if (base + 1 > order) return zero_ts(order);
    return sum_series(order, 1, [&, base](long long n) {
        if (base + n > order) return zero_ts(order);
        return mono_at(-alt(n), base + n, order) *
               pochhammer(-1, static_cast<int>(k + n) + 2, 1, std::nullopt, order);
    });
}

TS cor39b_bracket(int order) {
    TS boundary = mono_at(1, 1, order) *
                  pochhammer(-1, 2, 1, std::nullopt, order);
    return boundary + sum_series(order, 1, [&](long long k) {
               return cor39b_inner(k, order);
           });
}

BS lhs_cor39s1(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(-1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(-1, 1, 1, n, order).invert());
    });
}

BS rhs_cor39s1(int order) {
    return sum_bivariate(order, 1, [&](long long k) {
        if (k > order) return BS(order);
        return BS::monomial(-alt(k), 1, static_cast<int>(k), order) *
               pochhammer_z(-1, 1, static_cast<int>(k) + 1, 1, std::nullopt, order);
    });
}

BS lhs_cor39s2(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n + n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n + n), order) *
               pochhammer_z(-1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(-1, 1, 1, n, order).invert());
    });
}

BS rhs_cor39s2(int order) {
    return sum_bivariate(order, 1, [&](long long k) {
        long long base = k * (k - 1) / 2 + k;
        if (base + 1 > order) return BS(order);
        return sum_bivariate(order, 1, [&, base, k](long long n) {
            if (base + n > order) return BS(order);
            return BS::monomial(-alt(n), static_cast<int>(k),
                                static_cast<int>(base + n), order) *
                   pochhammer_z(-1, 1, static_cast<int>(n + k) + 1, 1,
                                std::nullopt, order);
        });
    });
}

BS lhs_cor39s3(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               pochhammer_z(-1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
               BS::from_series(pochhammer(-1, 1, 1, n - 1, order).invert());
    });
}

BS rhs_cor39s3(int order) {
    BS boundary = BS::monomial(1, 1, 1, order) *
                  pochhammer_z(-1, 1, 2, 1, std::nullopt, order);
    return boundary + sum_bivariate(order, 1, [&](long long k) {
               long long base = k * (k + 1) / 2 + k + 1;
               if (base + 1 > order) return BS(order);
               return sum_bivariate(order, 1, [&, base, k](long long n) {
                   if (base + n > order) return BS(order);
                   return BS::monomial(-alt(n), static_cast<int>(k) + 1,
                                       static_cast<int>(base + n), order) *
                          pochhammer_z(-1, 1, static_cast<int>(n + k) + 2, 1,
                                       std::nullopt, order);
               });
           });
}

TS rhs_lem41b(int order) {
    return sum_series(order, 1, [&](long long n) {
        long long e = n * (2 * n - 1);
        if (e > order) return zero_ts(order);
        return mono_at(1, e, order) *
               pochhammer(-1, 1, 1, 2 * n, order).invert();
    });
}

TS flushed_gf(int order) {
    return partition_gf(order) * pentagonal_block(order);
}

TS flushed_gf_alternate(int order) {
    return sum_series(order, 1, [&](long long n) {
        long long e = n * (2 * n - 1);
        if (e > order) return zero_ts(order);
        return mono_at(1, e, order) *
               pochhammer(1, 2, 2, 2 * n, order).invert() *
               pochhammer(1, static_cast<int>(2 * n) + 1, 1, std::nullopt, order)
                   .invert();
    });
}

TS concave_even_gf(int order) {
    return partition_gf(order) *
           (TS::constant(1, order) - pentagonal_block(order));
}

TS proper_gf(int order) {
    return TS::constant(1, order) +
           sum_series(order, 1, [&](long long n) {
               if (n * n > order) return zero_ts(order);
               TS d = pochhammer(1, 1, 1, n - 1, order);
               TS den = (d * d).times_binomial(-1, static_cast<int>(2 * n));
               return mono_at(1, n * n, order) * den.invert();
           });
}

TS rank_zero_gf(int order) {
    TS alt_block = sum_series(order, 1, [&](long long n) {
        if (pent(n) > order) return zero_ts(order);
        return mono_at(-alt(n), pent(n), order) -
               mono_at(-alt(n), pent(n) + n, order);
    });
    return partition_gf(order) * alt_block;
}

// Unflushed partitions refined by part count: three product forms and
// the partition-minus-excluded-set form.
BS uf_first_form(int order) {
    return sum_bivariate(order, 0, [&](long long n) {
        long long e = n * (2 * n + 1);
        if (e > order) return BS(order);
        BS den = BS::constant(1, order);
        for (long long j = 1; j <= 2 * n + 1 && 2 * j <= order; ++j)
            den = den.times_z_monomial_binomial(-1, 2, static_cast<int>(2 * j));
        return BS::monomial(1, static_cast<int>(2 * n), static_cast<int>(e), order) *
               den.invert() *
               pochhammer_z(1, 1, static_cast<int>(2 * n) + 2, 1, std::nullopt, order)
                   .invert();
    });
}

BS uf_second_sum(int order) {
    return sum_bivariate(order, 0, [&](long long n) {
        long long e = n * (2 * n + 1);
        if (e > order) return BS(order);
        return BS::monomial(1, static_cast<int>(2 * n), static_cast<int>(e), order) *
               pochhammer_z(-1, 1, 1, 1, 2 * n + 1, order).invert();
    });
}

BS uf_second_form(int order) {
    return pochhammer_z(1, 1, 1, 1, std::nullopt, order).invert() *
           uf_second_sum(order);
}

BS uf_third_form(int order) {
    BS s = sum_bivariate(order, 0, [&](long long n) {
        if (tri(n) > order) return BS(order);
        return BS::monomial(alt(n), static_cast<int>(n),
                            static_cast<int>(tri(n)), order) *
               pochhammer_z(-1, 1, 1, 1, n, order).invert();
    });
    return pochhammer_z(1, 1, 1, 1, std::nullopt, order).invert() * s;
}

BS excluded_set_gf(int order) {
    return sum_bivariate(order, 1, [&](long long n) {
        if (n * n > order) return BS(order);
        BS den = BS::from_series(pochhammer(1, 1, 1, n - 1, order)) *
                 pochhammer_z(1, 1, 1, 1, n - 1, order);
        if (2 * n <= order)
            den = den.times_z_monomial_binomial(-1, 2, static_cast<int>(2 * n));
        return BS::monomial(1, static_cast<int>(n), static_cast<int>(n * n), order) *
               den.invert();
    });
}

// ---- enumeration helpers ----

template <typename Fn>
void each_partition(long long n, Fn f) {
    Constraints c;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        f(Partition(parts));
        return true;
    });
}

template <typename Fn>
void each_distinct_partition(long long n, Fn f) {
    Constraints c;
    c.distinct = true;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        f(Partition(parts));
        return true;
    });
}

struct DistinctSplit {
    BigInt ee, eo, oe, oo; // (part count parity, smallest part parity)
};

DistinctSplit distinct_split(long long n) {
    DistinctSplit s;
    each_distinct_partition(n, [&](const Partition& p) {
        if (p.empty()) return;
        bool parts_odd = p.count() % 2 == 1;
        bool small_odd = p.smallest() % 2 == 1;
        BigInt& slot = parts_odd ? (small_odd ? s.oo : s.oe)
                                 : (small_odd ? s.eo : s.ee);
        ++slot;
    });
    return s;
}

// m -> signed count of initial-2-repetition partitions of n, sign +1
// when the number of once-occurring values is even; m = value count.
std::map<int, BigInt> initial_repetition_signed_table(long long n) {
    std::map<int, BigInt> t;
    each_partition(n, [&](const Partition& p) {
        if (!has_initial_repetitions(p, 2)) return;
        int values = 0, once = 0;
        int prev = 0;
        for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
            if (*it != prev) {
                ++values;
                if (p.multiplicity(*it) == 1) ++once;
                prev = *it;
            }
        }
        t[values] += once % 2 == 0 ? 1 : -1;
    });
    return t;
}

// m -> signed count of initial-2-repetition partitions of n that have
// a repeated value, sign +1 when the repeated values' total occurrence
// count is even; m = value count.
std::map<int, BigInt> repeated_occurrence_signed_table(long long n) {
    std::map<int, BigInt> t;
    each_partition(n, [&](const Partition& p) {
        if (!has_initial_repetitions(p, 2)) return;
        int values = 0;
        long long repeated = 0;
        int prev = 0;
        for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
            if (*it != prev) {
                ++values;
                int m = p.multiplicity(*it);
                if (m >= 2) repeated += m;
                prev = *it;
            }
        }
        if (repeated == 0) return;
        t[values] += repeated % 2 == 0 ? 1 : -1;
    });
    return t;
}

// m -> signed count of distinct-part non-staircase partitions of n,
// sign +1 when the first gap is even; m = part count.
std::map<int, BigInt> first_gap_signed_table(long long n) {
    std::map<int, BigInt> t;
    each_distinct_partition(n, [&](const Partition& p) {
        if (p.empty()) return;
        auto g = first_gap_size(p);
        if (!g) return;
        t[static_cast<int>(p.count())] += *g % 2 == 0 ? 1 : -1;
    });
    return t;
}

std::map<int, BigInt> unflushed_by_parts(long long n) {
    std::map<int, BigInt> t;
    each_partition(n, [&](const Partition& p) {
        if (!is_flushed(p)) ++t[static_cast<int>(p.count())];
    });
    return t;
}

std::map<int, BigInt> partitions_by_parts(long long n) {
    std::map<int, BigInt> t;
    each_partition(n,
                   [&](const Partition& p) { ++t[static_cast<int>(p.count())]; });
    return t;
}

std::map<int, BigInt> excluded_set_by_parts(long long n) {
    std::map<int, BigInt> t;
    each_partition(n, [&](const Partition& p) {
        DurfeeSymbol s = durfee_symbol(p);
        auto in_top = std::count(s.top.begin(), s.top.end(), s.d);
        auto in_bottom = std::count(s.bottom.begin(), s.bottom.end(), s.d);
        if (in_top == 0 && in_bottom % 2 == 0)
            ++t[static_cast<int>(p.count())];
    });
    return t;
}

BigInt table_value(const std::map<int, BigInt>& t, int m) {
    auto it = t.find(m);
    return it == t.end() ? BigInt(0) : it->second;
}

int table_max_key(const std::map<int, BigInt>& t) {
    return t.empty() ? -1 : t.rbegin()->first;
}

// ---- the check driver ----

class Checker {
public:
    Checker(std::string id, int order) : order_(order) {
        report_.id = std::move(id);
        report_.order = order;
        report_.status = CheckStatus::verified;
    }

    bool failed() const { return report_.status == CheckStatus::failed; }
    int order() const { return order_; }

    void series(const std::string& route, const TS& lhs, const TS& rhs,
                int from = 0) {
        if (failed()) return;
        int top = std::min({lhs.order(), rhs.order(), order_});
        for (int d = from; d <= top; ++d) {
            ++report_.comparisons;
            if (lhs.coeff(d) != rhs.coeff(d)) {
                fail(route, d, std::nullopt, lhs.coeff(d), rhs.coeff(d));
                return;
            }
        }
    }

    void bivariate(const std::string& route, const BS& lhs, const BS& rhs,
                   int from = 0) {
        if (failed()) return;
        int top = std::min({lhs.order(), rhs.order(), order_});
        for (int d = from; d <= top; ++d) {
            const ZPoly& a = lhs.coeff(d);
            const ZPoly& b = rhs.coeff(d);
            int zmax = std::max(a.degree(), b.degree());
            for (int m = 0; m <= zmax; ++m) {
                ++report_.comparisons;
                if (a.coeff(m) != b.coeff(m)) {
                    fail(route, d, m, a.coeff(m), b.coeff(m));
                    return;
                }
            }
        }
    }

    void value(const std::string& route, int q_degree, std::optional<int> z_degree,
               const BigInt& lhs, const BigInt& rhs) {
        if (failed()) return;
        ++report_.comparisons;
        if (lhs != rhs) fail(route, q_degree, z_degree, lhs, rhs);
    }

    VerificationReport take() { return std::move(report_); }

private:
    void fail(const std::string& route, int q_degree, std::optional<int> z_degree,
              BigInt lhs, BigInt rhs) {
        report_.status = CheckStatus::failed;
        report_.discrepancy = Discrepancy{route, q_degree, z_degree,
                                          std::move(lhs), std::move(rhs)};
    }

    int order_;
    VerificationReport report_;
};

// ---- per-case checks ----

void check_eq11(Checker& c, int order) {
    TS pb = pentagonal_block(order);
    TS fl = flushed_gf(order);
    std::vector<BigInt> counts(static_cast<std::size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n)
        counts[static_cast<std::size_t>(n)] = evaluate_statistic("F", n);
    TS count_series = TS::from_coefficients(counts);
    c.series("gf-vs-counts", fl, count_series);
    c.series("cleared", qq_inf(order) * count_series, pb);
    c.series("alternate-form", flushed_gf_alternate(order), fl);
}

void check_eq12(Checker& c, int order) {
    TS pb = pentagonal_block(order);
    TS gf = concave_even_gf(order);
    std::vector<BigInt> counts(static_cast<std::size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n)
        counts[static_cast<std::size_t>(n)] =
            static_cast<long long>(concave_even_compositions(n).size());
    TS count_series = TS::from_coefficients(counts);
    c.series("gf-vs-counts", gf, count_series);
    c.series("cleared", qq_inf(order) * count_series,
             TS::constant(1, order) - pb);
}

void check_thm21(Checker& c, int order) {
    c.series("series", lhs_thm21(order), rhs_thm21(order));
}

void check_cor22a(Checker& c, int order) {
    c.bivariate("series", lhs_cor22a(order), rhs_cor22a(order));
}

void check_cor22b(Checker& c, int order) {
    c.bivariate("series", lhs_cor22b(order), rhs_cor22b(order));
}

void check_eq24(Checker& c, int order) {
    TS target = TS::constant(1, order) - mock_phi(order);
    TS substituted =
        lhs_cor22a(order).substitute_q_power(2).substitute_z(-1, -1);
    c.series("substitution", substituted, target);
    TS explicit_sum = sum_series(order, 1, [&](long long n) {
        long long e = 2 * n * n - n;
        if (e > order) return zero_ts(order);
        TS den = pochhammer(1, 2, 2, n - 1, order)
                     .times_binomial(1, static_cast<int>(2 * n));
        return mono_at(alt(n), e, order) *
               pochhammer(-1, static_cast<int>(2 * n) + 1, 2, std::nullopt, order) *
               den.invert();
    });
    c.series("explicit-sum", explicit_sum, target);
}

void check_eq25(Checker& c, int order) {
    TS target = -mock_psi(order);
    TS substituted =
        lhs_cor22b(order).substitute_q_power(2).substitute_z(-1, -1);
    c.series("substitution", substituted, target);
    TS explicit_sum = sum_series(order, 1, [&](long long n) {
        long long e = 2 * n * n - n;
        if (e > order) return zero_ts(order);
        TS den = pochhammer(1, 2, 2, n - 1, order)
                     .times_binomial(-1, static_cast<int>(2 * n - 1));
        return mono_at(alt(n), e, order) *
               pochhammer(-1, static_cast<int>(2 * n) + 1, 2, std::nullopt, order) *
               den.invert();
    });
    c.series("explicit-sum", explicit_sum, target);
}

TS lhs_eq26(int order) {
    return mq_inf(order) *
           (TS::constant(1, order) - mock_phi(order).substitute_q_negate());
}

void check_eq26(Checker& c, int order) {
    c.series("series", lhs_eq26(order), rhs_eq26(order));
}

void check_eq27(Checker& c, int order) {
    TS lhs = lhs_eq27(order);
    c.series("form-a", lhs, rhs_eq27a(order));
    c.series("form-b", lhs, rhs_eq27b(order));
}

void check_thm23a(Checker& c, int order) {
    TS lhs = lhs_eq26(order);
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        DistinctSplit s = distinct_split(n);
        c.value("counts", static_cast<int>(n), std::nullopt,
                lhs.coeff(static_cast<int>(n)), s.oe + s.oo + s.ee - s.eo);
    }
}

void check_thm23b(Checker& c, int order) {
    TS lhs = lhs_eq27(order);
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        DistinctSplit s = distinct_split(n);
        c.value("counts", static_cast<int>(n), std::nullopt,
                lhs.coeff(static_cast<int>(n)), s.oo);
    }
}

void check_cor24(Checker& c, int order) {
    TS lhs = lhs_cor24(order);
    c.series("series", lhs, rhs_cor24(order));
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        DistinctSplit s = distinct_split(n);
        c.value("counts", static_cast<int>(n), std::nullopt,
                lhs.coeff(static_cast<int>(n)), s.oo + s.eo - s.ee - s.oe);
    }
}

void check_thm31(Checker& c, int order) {
    TS fraction = lhs_lem32(order);
    TS product = partition_gf(order) * alternating_triangular_from_zero(order);
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        BigInt frob = evaluate_statistic("frob_no_zero_top", n);
        BigInt missing = evaluate_statistic("smallest_missing_odd", n);
        c.value("counts-equal", static_cast<int>(n), std::nullopt, frob, missing);
        c.value("frobenius-route", static_cast<int>(n), std::nullopt, frob,
                fraction.coeff(static_cast<int>(n)));
        c.value("missing-part-route", static_cast<int>(n), std::nullopt, missing,
                product.coeff(static_cast<int>(n)));
    }
}

void check_lem32(Checker& c, int order) {
    c.series("fraction", lhs_lem32(order),
             partition_gf(order) * alternating_triangular_from_zero(order));
    c.series("cleared", lhs_lem32_cleared(order),
             alternating_triangular_from_zero(order));
}

void check_thm33(Checker& c, int order) {
    BS lhs = lhs_thm33(order);
    c.bivariate("series", lhs, rhs_thm33(order));
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        auto table = initial_repetition_signed_table(n);
        const ZPoly& row = lhs.coeff(static_cast<int>(n));
        int top = std::max(row.degree(), table_max_key(table));
        for (int m = 0; m <= top && !c.failed(); ++m) {
            BigInt counted = table_value(table, m);
            c.value("counts-vs-series", static_cast<int>(n), m, counted,
                    row.coeff(m));
            BigInt expected = 0;
            if (tri(m) == n) expected = alt(m);
            c.value("support", static_cast<int>(n), m, counted, expected);
        }
    }
}

void check_thm34(Checker& c, int order) {
    TS lhs = lhs_thm34(order);
    c.series("series", lhs, rhs_thm34(order));
    TS distinct_gf = mq_inf(order);
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        BigInt even_distinct = 0;
        each_distinct_partition(n, [&](const Partition& p) {
            if (p.count() % 2 == 0) ++even_distinct;
        });
        BigInt alternating = 0;
        for (long long j = 0; j * j <= n; ++j)
            alternating +=
                BigInt(alt(j)) * distinct_gf.coeff(static_cast<int>(n - j * j));
        c.value("counts", static_cast<int>(n), std::nullopt, even_distinct,
                alternating);
        c.value("gf-vs-counts", static_cast<int>(n), std::nullopt,
                lhs.coeff(static_cast<int>(n)), even_distinct);
    }
}

void check_cor35a(Checker& c, int order) {
    c.series("fraction", lhs_cor35a(order),
             partition_gf(order) * alternating_triangular(order));
    c.series("cleared", lhs_cor35a_cleared(order),
             alternating_triangular(order));
}

void check_cor35b(Checker& c, int order) {
    BS lhs = lhs_cor35b(order);
    BS rhs = rhs_cor35b(order);
    c.bivariate("series", lhs, rhs);
    c.series("z=1-shadow-lhs", lhs.at_z(1), lhs_cor35a_cleared(order));
    c.series("z=1-shadow-rhs", rhs.at_z(1), alternating_triangular(order));
}

void check_cor36(Checker& c, int order) {
    BS lhs = lhs_cor36(order);
    BS rhs = rhs_cor36(order);
    c.bivariate("series", lhs, rhs);
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        auto table = partitions_by_parts(n);
        const ZPoly& sum_row = lhs.coeff(static_cast<int>(n));
        const ZPoly& product_row = rhs.coeff(static_cast<int>(n));
        int top = std::max({sum_row.degree(), product_row.degree(),
                            table_max_key(table)});
        for (int m = 0; m <= top && !c.failed(); ++m) {
            BigInt counted = table_value(table, m);
            c.value("counts-vs-product", static_cast<int>(n), m, counted,
                    product_row.coeff(m));
            c.value("counts-vs-sum", static_cast<int>(n), m, counted,
                    sum_row.coeff(m));
        }
    }
}

void check_thm37(Checker& c, int order) {
    TS lhs = lhs_thm37(order);
    TS rhs = rhs_thm37(order);
    c.series("series", lhs, rhs);
    TS f = mock_f(order);
    c.series("fraction",
             TS::constant(1, order) + mq_inf(order).invert() * rhs, f);
    for (long long n = 0; n <= order && !c.failed(); ++n)
        c.value("rank-counts", static_cast<int>(n), std::nullopt,
                f.coeff(static_cast<int>(n)),
                evaluate_statistic("Ne_minus_No", n));
    for (long long n = 1; n <= order && !c.failed(); ++n)
        c.value("smallest-counts", static_cast<int>(n), std::nullopt,
                rhs.coeff(static_cast<int>(n)),
                evaluate_statistic("Lo_minus_Le", n));
}

void check_cor38(Checker& c, int order) {
    TS lhs = mock_phi(order).substitute_q_negate() -
             mock_psi(order).substitute_q_negate() * BigInt(2);
    c.series("series", lhs, mock_f(order));
}

void check_cor39a(Checker& c, int order) {
    TS bracket = cor39a_bracket(order);
    c.series("fraction", lhs_cor39a(order), mq_inf(order).invert() * bracket);
    c.series("cleared", lhs_cor39a_cleared(order), bracket);
}

void check_cor39b(Checker& c, int order) {
    TS bracket = cor39b_bracket(order);
    c.series("fraction", lhs_cor39b(order), mq_inf(order).invert() * bracket);
    c.series("cleared", lhs_cor39b_cleared(order), bracket);
}

void check_cor39s1(Checker& c, int order) {
    BS lhs = lhs_cor39s1(order);
    BS rhs = rhs_cor39s1(order);
    c.bivariate("series", lhs, rhs);
    c.series("z=1-shadow-lhs", lhs.at_z(1), lhs_thm37(order));
    c.series("z=1-shadow-rhs", rhs.at_z(1), rhs_thm37(order));
}

void check_cor39s2(Checker& c, int order) {
    BS lhs = lhs_cor39s2(order);
    BS rhs = rhs_cor39s2(order);
    c.bivariate("series", lhs, rhs);
    c.series("z=1-shadow-lhs", lhs.at_z(1), lhs_cor39a_cleared(order));
    c.series("z=1-shadow-rhs", rhs.at_z(1), cor39a_bracket(order));
}

void check_cor39s3(Checker& c, int order) {
    BS lhs = lhs_cor39s3(order);
    BS rhs = rhs_cor39s3(order);
    c.bivariate("series", lhs, rhs);
    c.series("z=1-shadow-lhs", lhs.at_z(1), lhs_cor39b_cleared(order));
    c.series("z=1-shadow-rhs", rhs.at_z(1), cor39b_bracket(order));
}

void check_thm310(Checker& c, int order) {
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        auto repeated = repeated_occurrence_signed_table(n);
        auto gaps = first_gap_signed_table(n);
        int top = std::max(table_max_key(repeated), table_max_key(gaps));
        for (int m = 0; m <= top && !c.failed(); ++m)
            c.value("per-m-counts", static_cast<int>(n), m,
                    table_value(repeated, m), table_value(gaps, m));
    }
}

void check_lem41a(Checker& c, int order) {
    c.series("series", pentagonal_block(order), rhs_thm21(order));
}

void check_lem41b(Checker& c, int order) {
    c.series("series", pentagonal_block(order), rhs_lem41b(order));
}

BigInt largest_part_signed_count(long long n) {
    BigInt total = 0;
    each_distinct_partition(n, [&](const Partition& p) {
        if (p.empty()) return;
        total += p.largest() % 2 == 1 ? 1 : -1;
    });
    return total;
}

void check_eq43(Checker& c, int order) {
    TS pb = pentagonal_block(order);
    for (long long n = 1; n <= order && !c.failed(); ++n)
        c.value("counts", static_cast<int>(n), std::nullopt,
                pb.coeff(static_cast<int>(n)), largest_part_signed_count(n));
}

void check_eq44(Checker& c, int order) {
    TS rhs = rhs_thm21(order);
    for (long long n = 1; n <= order && !c.failed(); ++n)
        c.value("counts", static_cast<int>(n), std::nullopt,
                rhs.coeff(static_cast<int>(n)), largest_part_signed_count(n));
}

void check_thm42(Checker& c, int order) {
    TS gf = proper_gf(order);
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        BigInt pr = evaluate_statistic("PR", n);
        if (n >= 1)
            c.value("counts", static_cast<int>(n), std::nullopt,
                    evaluate_statistic("F", n), pr);
        c.value("gf-vs-counts", static_cast<int>(n), std::nullopt,
                gf.coeff(static_cast<int>(n)), pr);
    }
}

void check_thm43(Checker& c, int order) {
    TS gf = concave_even_gf(order);
    for (long long n = 0; n <= order && !c.failed(); ++n) {
        BigInt ce = static_cast<long long>(concave_even_compositions(n).size());
        if (n >= 1)
            c.value("counts", static_cast<int>(n), std::nullopt, ce,
                    evaluate_statistic("IMPR", n));
        c.value("gf-vs-counts", static_cast<int>(n), std::nullopt,
                gf.coeff(static_cast<int>(n)), ce);
    }
}

void check_cor44(Checker& c, int order) {
    BS second = uf_second_form(order);
    c.bivariate("first-vs-second", uf_first_form(order), second);
    c.bivariate("second-vs-third", second, uf_third_form(order));
    BS partition_biv = pochhammer_z(1, 1, 1, 1, std::nullopt, order).invert();
    c.bivariate("series-vs-partition-minus-excluded", second,
                partition_biv - excluded_set_gf(order));
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        auto uf = unflushed_by_parts(n);
        auto all = partitions_by_parts(n);
        auto excluded = excluded_set_by_parts(n);
        const ZPoly& row = second.coeff(static_cast<int>(n));
        int top = std::max({table_max_key(uf), table_max_key(all),
                            table_max_key(excluded), row.degree()});
        for (int m = 0; m <= top && !c.failed(); ++m) {
            BigInt u = table_value(uf, m);
            c.value("counts", static_cast<int>(n), m, u,
                    table_value(all, m) - table_value(excluded, m));
            c.value("gf-vs-counts", static_cast<int>(n), m, row.coeff(m), u);
        }
    }
}

void check_thm45(Checker& c, int order) {
    for (long long n = 1; n <= order && !c.failed(); ++n) {
        BigInt odd = 0, even = 0;
        each_partition(n, [&](const Partition& p) {
            if (is_flushed(p)) return;
            (p.count() % 2 == 1 ? odd : even) += 1;
        });
        c.value("counts", static_cast<int>(n), std::nullopt, odd, even);
    }
    c.series("alternating-sum", uf_second_form(order).at_z(-1),
             TS::constant(1, order));
}

void check_rank0(Checker& c, int order) {
    TS gf = rank_zero_gf(order);
    for (long long n = 1; n <= order && !c.failed(); ++n)
        c.value("gf-vs-counts", static_cast<int>(n), std::nullopt,
                gf.coeff(static_cast<int>(n)),
                evaluate_statistic("N_rank", n, 0));
}

// ---- registry ----

struct CaseDef {
    IdentityInfo info;
    void (*run)(Checker&, int);
};

const std::vector<CaseDef>& case_table() {
    static const std::vector<CaseDef> cases = {
        {{"eq1.1-flushed-gf",
          "flushed-partition generating function: product form, cleared form, "
          "and the alternate double-pochhammer form, against exact counts",
          30, 60, false},
         check_eq11},
        {{"eq1.2-ce-gf",
          "even-length concave compositions: generating function against "
          "exact enumeration, plus the cleared form",
          30, 40, false},
         check_eq12},
        {{"thm2.1",
          "signed staircase-triple sum: the full generating function equals "
          "the fixed-point generating function",
          60, 300, false},
         check_thm21},
        {{"cor2.2a",
          "staircase-index refinement of thm2.1 (z tracks the index)",
          30, 40, false},
         check_cor22a},
        {{"cor2.2b",
          "refinement of thm2.1 with z tracking index plus least entry",
          30, 40, false},
         check_cor22b},
        {{"eq2.4-phi",
          "q -> q^2, z -> -1/q collapse of cor2.2a onto 1 - phi(q), by "
          "direct substitution and by an explicit single-variable sum",
          30, 40, false},
         check_eq24},
        {{"eq2.5-psi",
          "q -> q^2, z -> -1/q collapse of cor2.2b onto -psi(q), by direct "
          "substitution and by an explicit single-variable sum",
          30, 40, false},
         check_eq25},
        {{"eq2.6",
          "(-q;q)_inf (1 - phi(-q)) as an Eulerian sum",
          60, 300, false},
         check_eq26},
        {{"eq2.7",
          "-(-q;q)_inf psi(-q) as two equivalent Eulerian sums",
          60, 300, false},
         check_eq27},
        {{"thm2.3a",
          "coefficients of eq2.6 count distinct-part partitions weighted by "
          "part-count and smallest-part parities (three plus, one minus)",
          30, 60, false},
         check_thm23a},
        {{"thm2.3b",
          "coefficients of eq2.7 count distinct-part partitions with odd "
          "length and odd smallest part",
          30, 60, false},
         check_thm23b},
        {{"cor2.4",
          "(-q;q)_inf (phi(-q) - 2 psi(-q) - 1) as a signed pochhammer sum "
          "and as a four-way parity count",
          30, 60, false},
         check_cor24},
        {{"thm3.1-counts",
          "partitions without zero in the top diagonal row match partitions "
          "whose smallest missing part is odd, and both match the series",
          35, 60, false},
         check_thm31},
        {{"lem3.2",
          "sum of q^(n^2+n)/(q;q)_n^2 equals the alternating triangular "
          "series over (q;q)_inf, in fraction and cleared forms",
          60, 300, false},
         check_lem32},
        {{"thm3.3",
          "z-refined lem3.2: coefficients are supported on staircases with "
          "sign (-1)^j, matching signed initial-repetition counts",
          30, 40, false},
         check_thm33},
        {{"thm3.4-QE",
          "even-length distinct-part partitions: Eulerian sum, product form, "
          "and the alternating square-shift convolution",
          40, 60, false},
         check_thm34},
        {{"cor3.5a",
          "sum of q^(n^2)/((q;q)_(n-1)(q;q)_n) equals the positive "
          "alternating triangular series over (q;q)_inf",
          60, 300, false},
         check_cor35a},
        {{"cor3.5b",
          "z-refinement of cor3.5a with its z = 1 shadow",
          30, 40, false},
         check_cor35b},
        {{"cor3.6-durfee",
          "square-anchored double sum rebuilds the two-variable partition "
          "product; coefficients count partitions by part count",
          30, 40, false},
         check_cor36},
        {{"thm3.7-fine",
          "Eulerian form of f(q): series identity, the fraction form, rank "
          "parity counts, and smallest-part parity counts",
          40, 60, false},
         check_thm37},
        {{"cor3.8-ramanujan",
          "phi(-q) - 2 psi(-q) = f(q)",
          60, 300, false},
         check_cor38},
        {{"cor3.9a",
          "sum of q^(n^2+n)/(-q;q)_n^2 against the double alternating tail, "
          "in fraction and cleared forms",
          60, 120, false},
         check_cor39a},
        {{"cor3.9b",
          "sum of q^(n^2)/((-q;q)_(n-1)(-q;q)_n) against the boundary term "
          "plus double alternating tail, in fraction and cleared forms",
          60, 120, false},
         check_cor39b},
        {{"cor3.9s1",
          "z-refinement of thm3.7 with its z = 1 shadow",
          30, 40, false},
         check_cor39s1},
        {{"cor3.9s2",
          "z-refinement of cor3.9a with its z = 1 shadow",
          30, 40, false},
         check_cor39s2},
        {{"cor3.9s3",
          "z-refinement of cor3.9b with its z = 1 shadow",
          30, 40, false},
         check_cor39s3},
        {{"thm3.10-counts",
          "signed initial-repetition partitions with a repeated value match "
          "signed non-staircase distinct partitions, part count by part count",
          30, 60, false},
         check_thm310},
        {{"lem4.1a",
          "the pentagonal block equals the signed triangular pochhammer sum",
          60, 300, false},
         check_lem41a},
        {{"lem4.1b",
          "the pentagonal block equals the even-indexed Eulerian sum",
          60, 300, false},
         check_lem41b},
        {{"eq4.3-fine-franklin",
          "pentagonal block coefficients equal distinct-part counts signed "
          "by largest-part parity",
          40, 60, false},
         check_eq43},
        {{"eq4.4",
          "the signed triangular pochhammer sum counts distinct-part "
          "partitions signed by largest-part parity",
          40, 60, false},
         check_eq44},
        {{"thm4.2-F-eq-PR",
          "flushed partitions are equinumerous with proper partitions, and "
          "the proper generating function matches its counts",
          30, 60, false},
         check_thm42},
        {{"thm4.3-ce-eq-IMPR",
          "even-length concave compositions are equinumerous with improper "
          "partitions, and the generating function matches the enumeration",
          25, 40, false},
         check_thm43},
        {{"cor4.4-unflushed-m-parts",
          "unflushed partitions by part count: three product forms agree and "
          "equal all partitions minus the excluded Durfee class",
          25, 30, false},
         check_cor44},
        {{"thm4.5-parity",
          "unflushed partitions split evenly by part-count parity",
          30, 40, false},
         check_thm45},
        {{"rank0-atkin",
          "rank-zero partition counts from the pentagonal-type series "
          "(coefficient 0 differs from the count at n = 0, so n >= 1)",
          30, 60, true},
         check_rank0},
    };
    return cases;
}

const CaseDef* find_case(const std::string& id) {
    for (const auto& cd : case_table())
        if (cd.info.id == id) return &cd;
    return nullptr;
}

VerificationReport run_case(const CaseDef& cd, int order) {
    Checker checker(cd.info.id, order);
    auto start = std::chrono::steady_clock::now();
    cd.run(checker, order);
    auto stop = std::chrono::steady_clock::now();
    VerificationReport report = checker.take();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

} // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& cd : case_table()) v.push_back(cd.info);
        return v;
    }();
    return infos;
}

bool is_known_identity(const std::string& id) {
    return find_case(id) != nullptr;
}

VerificationReport verify_identity(const std::string& id,
                                   std::optional<int> order) {
    const CaseDef* cd = find_case(id);
    if (!cd) throw RegistryError("unknown identity: " + id);
    int ord = order.value_or(cd->info.default_order);
    if (ord < 1) throw DomainError("order must be at least 1");
    if (ord > cd->info.max_order)
        throw FeasibilityError("identity " + id + " supports order <= " +
                               std::to_string(cd->info.max_order));
    return run_case(*cd, ord);
}

std::vector<VerificationReport> verify_all(std::optional<int> order,
                                           bool include_optional) {
    if (order && *order < 1) throw DomainError("order must be at least 1");
    std::vector<VerificationReport> reports;
    for (const auto& cd : case_table()) {
        if (cd.info.optional_case && !include_optional) continue;
        int ord = order ? std::min(*order, cd.info.max_order)
                        : cd.info.default_order;
        reports.push_back(run_case(cd, ord));
    }
    return reports;
}

SelftestReport run_perturbed_selftest() {
    constexpr int kOrder = 8;
    constexpr int kPlantedDegree = 3;
    SelftestReport out;
    out.expected_degree = kPlantedDegree;
    TS lhs = lhs_lem32_cleared(kOrder);
    TS rhs = alternating_triangular_from_zero(kOrder) +
             TS::monomial(1, kPlantedDegree, kOrder);
    auto mismatch = first_mismatch(lhs, rhs);
    out.detected = mismatch.has_value();
    if (mismatch) {
        out.degree_correct = mismatch->degree == kPlantedDegree;
        out.discrepancy = Discrepancy{"perturbed-cleared-form", mismatch->degree,
                                      std::nullopt, mismatch->lhs, mismatch->rhs};
    }
    return out;
}

const std::vector<NamedSeries>& series_catalog() {
    static const std::vector<NamedSeries> cat = {
        {"partition-gf", "1/(q;q)_inf: partitions by weight"},
        {"distinct-gf", "(-q;q)_inf: distinct-part partitions by weight"},
        {"flushed-gf", "flushed partitions by weight"},
        {"concave-even-gf", "even-length concave compositions by weight"},
        {"proper-gf", "proper partitions by weight"},
        {"unflushed-gf", "unflushed partitions by weight"},
        {"mock-f", "third-order mock theta function f(q)"},
        {"mock-phi", "third-order mock theta function phi(q)"},
        {"mock-psi", "third-order mock theta function psi(q)"},
        {"euler-pochhammer", "(q;q)_inf"},
        {"pentagonal-block", "sum over n >= 1 of q^(n(3n-1)/2) - q^(n(3n+1)/2)"},
        {"rank-zero-gf", "rank-zero partitions by weight (exact for n >= 1)"},
    };
    return cat;
}

bool is_known_series(const std::string& id) {
    for (const auto& s : series_catalog())
        if (s.id == id) return true;
    return false;
}

TruncatedSeries build_named_series(const std::string& id, int order) {
    if (!is_known_series(id)) throw RegistryError("unknown series: " + id);
    if (order < 0) throw DomainError("order must be nonnegative");
    constexpr int kSeriesOrderCap = 400;
    if (order > kSeriesOrderCap)
        throw FeasibilityError("series printing is capped at order <= " +
                               std::to_string(kSeriesOrderCap));
    if (id == "partition-gf") return partition_gf(order);
    if (id == "distinct-gf") return mq_inf(order);
    if (id == "flushed-gf") return flushed_gf(order);
    if (id == "concave-even-gf") return concave_even_gf(order);
    if (id == "proper-gf") return proper_gf(order);
    if (id == "unflushed-gf") return partition_gf(order) - flushed_gf(order);
    if (id == "mock-f") return mock_f(order);
    if (id == "mock-phi") return mock_phi(order);
    if (id == "mock-psi") return mock_psi(order);
    if (id == "euler-pochhammer") return qq_inf(order);
    if (id == "pentagonal-block") return pentagonal_block(order);
    return rank_zero_gf(order);
}

} // namespace partlab

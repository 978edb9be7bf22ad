#include "partlab/involution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "partlab/bivariate.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"
#include "partlab/series.hpp"

namespace partlab {

namespace {

long long triangular(long long d) { return d * (d + 1) / 2; }

bool strictly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1]) return false;
    return true;
}

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

bool all_nonnegative(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

int parity_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

} // namespace

std::string kind_name(InvolutionKind kind) {
    switch (kind) {
        case InvolutionKind::alpha: return "alpha";
        case InvolutionKind::alpha1: return "alpha1";
        case InvolutionKind::alpha2: return "alpha2";
    }
    return "?";
}

std::optional<InvolutionKind> parse_kind(const std::string& name) {
    if (name == "alpha") return InvolutionKind::alpha;
    if (name == "alpha1") return InvolutionKind::alpha1;
    if (name == "alpha2") return InvolutionKind::alpha2;
    return std::nullopt;
}

int staircase_index(const SignedTriple& t) noexcept {
    return static_cast<int>(t.lambda.size() + t.mu.size());
}

long long triple_weight(const SignedTriple& t) noexcept {
    long long total = triangular(staircase_index(t));
    for (int x : t.lambda) total += x;
    for (int x : t.mu) total += x;
    return total;
}

void validate_triple(InvolutionKind kind, const SignedTriple& t) {
    if (!all_nonnegative(t.lambda) || !all_nonnegative(t.mu))
        throw DomainError("triple entries must be nonnegative");
    if (!weakly_decreasing(t.mu))
        throw DomainError("mu must be weakly decreasing");
    if (!strictly_decreasing(t.lambda))
        throw DomainError("lambda must be strictly decreasing");
    switch (kind) {
        case InvolutionKind::alpha:
        case InvolutionKind::alpha2:
            if (t.lambda.empty())
                throw DomainError("lambda must be nonempty for this involution");
            break;
        case InvolutionKind::alpha1:
            if (!t.lambda.empty() && t.lambda.back() < 1)
                throw DomainError("lambda parts must be positive for alpha1");
            break;
    }
}

int triple_sign(InvolutionKind kind, const SignedTriple& t) {
    switch (kind) {
        case InvolutionKind::alpha:
            return parity_sign(static_cast<long long>(t.lambda.back()) +
                               static_cast<long long>(t.mu.size()));
        case InvolutionKind::alpha1:
            return parity_sign(static_cast<long long>(t.mu.size()));
        case InvolutionKind::alpha2:
            return parity_sign(static_cast<long long>(t.lambda.front()) -
                               static_cast<long long>(t.lambda.size()) + 1);
    }
    return 1;
}

bool is_fixed(InvolutionKind kind, const SignedTriple& t) {
    int mu_front = t.mu.empty() ? 0 : t.mu.front();
    switch (kind) {
        case InvolutionKind::alpha:
            return t.lambda.size() == 1 && t.lambda[0] >= mu_front;
        case InvolutionKind::alpha1:
            return t.lambda.empty() && mu_front == 0;
        case InvolutionKind::alpha2:
            return t.lambda.size() == 1 &&
                   (t.mu.empty() || t.lambda.back() <= t.mu.back());
    }
    return false;
}

std::optional<SignedTriple> apply_involution(InvolutionKind kind,
                                             const SignedTriple& t) {
    validate_triple(kind, t);
    if (is_fixed(kind, t)) return std::nullopt;
    SignedTriple out = t;
    if (kind == InvolutionKind::alpha2) {
        // Moves happen at the small ends.
        if (out.mu.empty() || out.lambda.back() <= out.mu.back()) {
            out.mu.push_back(out.lambda.back());
            out.lambda.pop_back();
        } else {
            out.lambda.push_back(out.mu.back());
            out.mu.pop_back();
        }
    } else {
        // Moves happen at the large ends.
        int lam_front = out.lambda.empty() ? 0 : out.lambda.front();
        int mu_front = out.mu.empty() ? 0 : out.mu.front();
        if (!out.lambda.empty() && lam_front >= mu_front) {
            out.mu.insert(out.mu.begin(), lam_front);
            out.lambda.erase(out.lambda.begin());
        } else {
            out.lambda.insert(out.lambda.begin(), mu_front);
            out.mu.erase(out.mu.begin());
        }
    }
    return out;
}

std::vector<SignedTriple> enumerate_triples(InvolutionKind kind,
                                            long long weight) {
    if (weight < 0) throw DomainError("weight must be nonnegative");
    std::vector<SignedTriple> out;

    // lambda candidates of exactly n entries summing to s: strictly
    // decreasing positive sequences, plus (except for alpha1) the same
    // with a trailing 0 appended.
    auto lambdas = [&](int n, long long s) {
        std::vector<std::vector<int>> res;
        Constraints c;
        c.distinct = true;
        c.exact_parts = n;
        for_each_partition(s, c, [&](const std::vector<int>& parts) {
            res.push_back(parts);
            return true;
        });
        if (kind != InvolutionKind::alpha1 && n >= 1) {
            c.exact_parts = n - 1;
            for_each_partition(s, c, [&](const std::vector<int>& parts) {
                std::vector<int> with_zero = parts;
                with_zero.push_back(0);
                res.push_back(std::move(with_zero));
                return true;
            });
        }
        return res;
    };

    // mu candidates of exactly l entries (zeros allowed) summing to s:
    // partitions into at most l parts, padded with zeros.
    auto mus = [&](int l, long long s) {
        std::vector<std::vector<int>> res;
        Constraints c;
        c.max_parts = l;
        for_each_partition(s, c, [&](const std::vector<int>& parts) {
            std::vector<int> padded = parts;
            padded.resize(static_cast<std::size_t>(l), 0);
            res.push_back(std::move(padded));
            return true;
        });
        return res;
    };

    for (int d = 0; triangular(d) <= weight; ++d) {
        long long rest = weight - triangular(d);
        int n_min = kind == InvolutionKind::alpha1 ? 0 : 1;
        for (int n = n_min; n <= d; ++n) {
            int l = d - n;
            for (long long sa = 0; sa <= rest; ++sa) {
                auto ls = lambdas(n, sa);
                if (ls.empty()) continue;
                auto ms = mus(l, rest - sa);
                for (const auto& lam : ls)
                    for (const auto& mu : ms)
                        out.push_back(SignedTriple{lam, mu});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SignedTriple& x, const SignedTriple& y) {
                  int dx = staircase_index(x), dy = staircase_index(y);
                  if (dx != dy) return dx < dy;
                  if (x.lambda.size() != y.lambda.size())
                      return x.lambda.size() < y.lambda.size();
                  if (x.lambda != y.lambda) return x.lambda < y.lambda;
                  return x.mu < y.mu;
              });
    return out;
}

namespace {

// The signed generating function of all triples of a kind, and of its
// fixed points, as independently built q-series.
TruncatedSeries all_series(InvolutionKind kind, int order) {
    switch (kind) {
        case InvolutionKind::alpha:
            return sum_series(order, 1, [&](long long n) {
                auto head = TruncatedSeries::monomial(1, static_cast<int>(n * n), order) *
                            pochhammer(1, static_cast<int>(n) + 1, 1, std::nullopt, order);
                auto den = pochhammer(1, 1, 1, n - 1, order)
                               .times_binomial(1, static_cast<int>(n));
                return head * den.invert();
            });
        case InvolutionKind::alpha1:
            return sum_series(order, 0, [&](long long n) {
                auto head = TruncatedSeries::monomial(1, static_cast<int>(n * n + n), order) *
                            pochhammer(1, static_cast<int>(n) + 1, 1, std::nullopt, order);
                return head * pochhammer(1, 1, 1, n, order).invert();
            });
        case InvolutionKind::alpha2:
            return sum_series(order, 1, [&](long long n) {
                auto head = TruncatedSeries::monomial(1, static_cast<int>(n * n), order) *
                            pochhammer(-1, static_cast<int>(n) + 1, 1, std::nullopt, order);
                return head * pochhammer(-1, 1, 1, n, order).invert();
            });
    }
    throw DomainError("unknown involution kind");
}

TruncatedSeries fixed_series(InvolutionKind kind, int order) {
    switch (kind) {
        case InvolutionKind::alpha:
            return sum_series(order, 1, [&](long long n) {
                int sign = n % 2 == 1 ? 1 : -1;
                return TruncatedSeries::monomial(sign, static_cast<int>(triangular(n)), order) *
                       pochhammer(-1, 1, 1, n, order).invert();
            });
        case InvolutionKind::alpha1:
            return sum_series(order, 0, [&](long long n) {
                int sign = n % 2 == 0 ? 1 : -1;
                return TruncatedSeries::monomial(sign, static_cast<int>(triangular(n)), order);
            });
        case InvolutionKind::alpha2:
            return sum_series(order, 1, [&](long long k) {
                int sign = k % 2 == 1 ? 1 : -1;
                return TruncatedSeries::monomial(sign, static_cast<int>(k), order) *
                       pochhammer(-1, static_cast<int>(k) + 1, 1, std::nullopt, order);
            });
    }
    throw DomainError("unknown involution kind");
}

// z-refined generating functions. Each returns {all, fixed} with the
// grouping exponent named in the harness report.
struct RefinedPair {
    std::string grouping;
    BivariateSeries all;
    BivariateSeries fixed;
};

BivariateSeries inv_neg_z_poch(int j, std::optional<long long> count, int order) {
    // 1 / product of (1 + z q^e)
    return pochhammer_z(-1, 1, j, 1, count, order).invert();
}

std::vector<RefinedPair> refined_series(InvolutionKind kind, int order) {
    std::vector<RefinedPair> out;
    switch (kind) {
        case InvolutionKind::alpha: {
            auto all_d = sum_bivariate(order, 1, [&](long long n) {
                auto head = BivariateSeries::monomial(1, static_cast<int>(n),
                                                      static_cast<int>(n * n), order) *
                            pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order);
                auto den = pochhammer(1, 1, 1, n - 1, order)
                               .times_binomial(1, static_cast<int>(n));
                return head * BivariateSeries::from_series(den.invert());
            });
            auto fixed_d = sum_bivariate(order, 1, [&](long long n) {
                int sign = n % 2 == 1 ? 1 : -1;
                return BivariateSeries::monomial(sign, static_cast<int>(n),
                                                 static_cast<int>(triangular(n)), order) *
                       BivariateSeries::from_series(pochhammer(-1, 1, 1, n, order).invert());
            });
            out.push_back({"z^d", std::move(all_d), std::move(fixed_d)});
            auto all_k = sum_bivariate(order, 1, [&](long long n) {
                auto head = BivariateSeries::monomial(1, static_cast<int>(n),
                                                      static_cast<int>(n * n), order) *
                            pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order);
                return head *
                       BivariateSeries::from_series(pochhammer(1, 1, 1, n - 1, order).invert()) *
                       inv_neg_z_poch(static_cast<int>(n), 1, order);
            });
            auto fixed_k = sum_bivariate(order, 1, [&](long long n) {
                int sign = n % 2 == 1 ? 1 : -1;
                return BivariateSeries::monomial(sign, static_cast<int>(n),
                                                 static_cast<int>(triangular(n)), order) *
                       inv_neg_z_poch(1, n, order);
            });
            out.push_back({"z^(d+min(lambda))", std::move(all_k), std::move(fixed_k)});
            break;
        }
        case InvolutionKind::alpha1: {
            auto all_d = sum_bivariate(order, 0, [&](long long n) {
                return BivariateSeries::monomial(1, static_cast<int>(n),
                                                 static_cast<int>(n * n + n), order) *
                       pochhammer_z(1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
                       BivariateSeries::from_series(pochhammer(1, 1, 1, n, order).invert());
            });
            auto fixed_d = sum_bivariate(order, 0, [&](long long j) {
                int sign = j % 2 == 0 ? 1 : -1;
                return BivariateSeries::monomial(sign, static_cast<int>(j),
                                                 static_cast<int>(triangular(j)), order);
            });
            out.push_back({"z^d", std::move(all_d), std::move(fixed_d)});
            break;
        }
        case InvolutionKind::alpha2: {
            auto all_d = sum_bivariate(order, 1, [&](long long n) {
                return BivariateSeries::monomial(1, static_cast<int>(n),
                                                 static_cast<int>(n * n), order) *
                       pochhammer_z(-1, 1, static_cast<int>(n) + 1, 1, std::nullopt, order) *
                       BivariateSeries::from_series(pochhammer(-1, 1, 1, n, order).invert());
            });
            auto fixed_d = sum_bivariate(order, 1, [&](long long k) {
                int sign = k % 2 == 1 ? 1 : -1;
                return BivariateSeries::monomial(sign, 1, static_cast<int>(k), order) *
                       pochhammer_z(-1, 1, static_cast<int>(k) + 1, 1, std::nullopt, order);
            });
            out.push_back({"z^d", std::move(all_d), std::move(fixed_d)});
            break;
        }
    }
    return out;
}

// Grouping exponent of a triple under a refined pair: z^d for all
// kinds; alpha additionally refines by d + min(lambda).
int grouping_exponent(std::size_t pair_index, const SignedTriple& t) {
    int d = staircase_index(t);
    if (pair_index == 0) return d;
    return d + (t.lambda.empty() ? 0 : t.lambda.back());
}

} // namespace

HarnessReport run_involution_harness(InvolutionKind kind,
                                     long long max_weight,
                                     bool z_refined) {
    if (max_weight < 0) throw DomainError("max weight must be nonnegative");
    if (max_weight > 60)
        throw FeasibilityError("involution harness supports max weight <= 60");
    int order = static_cast<int>(max_weight);

    HarnessReport report;
    report.kind = kind;
    report.max_weight = max_weight;
    report.z_refined = z_refined;

    TruncatedSeries all_gf = all_series(kind, order);
    TruncatedSeries fixed_gf = fixed_series(kind, order);
    std::vector<RefinedPair> refined;
    if (z_refined) refined = refined_series(kind, order);

    auto note = [&](const std::string& msg) {
        if (report.first_problem.empty()) report.first_problem = msg;
    };

    bool all_ok = true;
    for (long long w = 0; w <= max_weight; ++w) {
        HarnessRow row;
        row.weight = w;
        auto ts = enumerate_triples(kind, w);
        row.triples = static_cast<long long>(ts.size());

        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& t : ts) seen.insert({t.lambda, t.mu});

        row.structure_ok = seen.size() == ts.size();
        if (!row.structure_ok)
            note("duplicate triples at weight " + std::to_string(w));

        std::map<int, BigInt> by_group_all[2];
        std::map<int, BigInt> by_group_fixed[2];

        for (const auto& t : ts) {
            int s = triple_sign(kind, t);
            row.signed_sum += s;
            bool fixed = is_fixed(kind, t);
            if (fixed) row.fixed_sum += s;
            for (std::size_t g = 0; g < refined.size(); ++g) {
                int m = grouping_exponent(g, t);
                by_group_all[g][m] += s;
                if (fixed) by_group_fixed[g][m] += s;
            }

            if (fixed) continue;
            auto image = apply_involution(kind, t);
            std::string where = " at weight " + std::to_string(w);
            if (!image) {
                row.structure_ok = false;
                note("fixed-point test disagrees with apply" + where);
                continue;
            }
            try {
                validate_triple(kind, *image);
            } catch (const DomainError& ex) {
                row.structure_ok = false;
                note(std::string("image leaves the domain: ") + ex.what() + where);
                continue;
            }
            if (!seen.count({image->lambda, image->mu})) {
                row.structure_ok = false;
                note("image escapes the enumerated set" + where);
            }
            if (triple_weight(*image) != w) {
                row.structure_ok = false;
                note("image changes the weight" + where);
            }
            if (staircase_index(*image) != staircase_index(t)) {
                row.structure_ok = false;
                note("image changes the staircase index" + where);
            }
            if (triple_sign(kind, *image) != -s) {
                row.structure_ok = false;
                note("image does not reverse the sign" + where);
            }
            auto back = apply_involution(kind, *image);
            if (!back || !(*back == t)) {
                row.structure_ok = false;
                note("applying twice does not return the triple" + where);
            }
        }

        row.series_all_coeff = all_gf.coeff(static_cast<int>(w));
        row.series_fixed_coeff = fixed_gf.coeff(static_cast<int>(w));
        row.sums_ok = row.signed_sum == row.fixed_sum &&
                      row.signed_sum == row.series_all_coeff &&
                      row.fixed_sum == row.series_fixed_coeff;
        if (!row.sums_ok)
            note("signed sums disagree with the series at weight " + std::to_string(w));

        row.refined_ok = true;
        for (std::size_t g = 0; g < refined.size(); ++g) {
            const ZPoly& pa = refined[g].all.coeff(static_cast<int>(w));
            const ZPoly& pf = refined[g].fixed.coeff(static_cast<int>(w));
            int top = std::max({pa.degree(), pf.degree(),
                                by_group_all[g].empty() ? -1 : by_group_all[g].rbegin()->first,
                                by_group_fixed[g].empty() ? -1 : by_group_fixed[g].rbegin()->first});
            for (int m = 0; m <= top; ++m) {
                BigInt ea = by_group_all[g].count(m) ? by_group_all[g][m] : BigInt(0);
                BigInt ef = by_group_fixed[g].count(m) ? by_group_fixed[g][m] : BigInt(0);
                if (ea != pa.coeff(m) || ef != pf.coeff(m) || ea != ef) {
                    row.refined_ok = false;
                    note("refined " + refined[g].grouping + " sums disagree at weight " +
                         std::to_string(w) + ", z^" + std::to_string(m));
                    break;
                }
            }
            if (!row.refined_ok) break;
        }

        if (!(row.structure_ok && row.sums_ok && row.refined_ok)) all_ok = false;
        report.rows.push_back(std::move(row));
    }

    report.ok = all_ok;
    return report;
}

} // namespace partlab

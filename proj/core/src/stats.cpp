#include "partlab/stats.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"
#include "partlab/series.hpp"

namespace partlab {

bool is_flushed(const Partition& p) {
    for (int j = 1;; ++j) {
        if (p.multiplicity(j) % 2 == 0) return j % 2 == 0;
    }
}

bool is_proper(const Partition& p) {
    DurfeeSymbol s = durfee_symbol(p);
    auto count_d = [&](const std::vector<int>& row) {
        return std::count(row.begin(), row.end(), s.d);
    };
    return count_d(s.top) == count_d(s.bottom);
}

bool has_initial_repetitions(const Partition& p, int k) {
    if (k < 1) throw DomainError("repetition threshold must be positive");
    int prev = 0;
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
        int v = *it;
        if (v == prev) continue; // first visit per value (scanning upward)
        if (p.multiplicity(v) >= k) {
            for (int i = prev + 1; i < v; ++i)
                if (p.multiplicity(i) < k) return false;
            if (prev != 0 && p.multiplicity(prev) < k) return false;
        }
        prev = v;
    }
    return true;
}

int smallest_missing_part(const Partition& p) {
    int j = 1;
    while (p.multiplicity(j) > 0) ++j;
    return j;
}

std::optional<int> first_gap_size(const Partition& p) {
    int prev = 0;
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
        if (*it - prev > 1) return *it - prev;
        prev = *it;
    }
    return std::nullopt;
}

bool frobenius_top_contains_zero(const Partition& p) {
    int d = durfee_size(p);
    for (int i = 0; i < d; ++i)
        if (p.part(i) - (i + 1) == 0) return true;
    return false;
}

bool is_staircase(const Partition& p) {
    int expect = static_cast<int>(p.count());
    for (int x : p.parts()) {
        if (x != expect) return false;
        --expect;
    }
    return true;
}

namespace {

bool nonempty_distinct(const Partition& p) {
    return !p.empty() && p.has_distinct_parts();
}

// Distinct values of p with their multiplicities, ascending.
std::vector<std::pair<int, int>> value_multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
        if (!out.empty() && out.back().first == *it)
            ++out.back().second;
        else
            out.emplace_back(*it, 1);
    }
    return out;
}

// Classification used by the initial-repetition tables: number of
// distinct values, number of values occurring once, and the total
// number of occurrences of repeated values.
struct RepetitionProfile {
    int values = 0;
    int once = 0;
    long long repeated_occurrences = 0;
};

RepetitionProfile repetition_profile(const Partition& p) {
    RepetitionProfile r;
    for (auto [v, m] : value_multiplicities(p)) {
        ++r.values;
        if (m == 1)
            ++r.once;
        else
            r.repeated_occurrences += m;
    }
    return r;
}

using TableAccumulator =
    std::function<void(const Partition&, std::map<long long, BigInt>&)>;

BigInt run_table(long long n, std::optional<long long> m,
                 const TableAccumulator& acc) {
    std::map<long long, BigInt> table;
    Constraints c;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        acc(Partition(parts), table);
        return true;
    });
    if (m) {
        auto it = table.find(*m);
        return it == table.end() ? BigInt(0) : it->second;
    }
    BigInt total = 0;
    for (const auto& [key, v] : table) total += v;
    return total;
}

BigInt count_where(long long n, const std::function<bool(const Partition&)>& pred) {
    BigInt total = 0;
    Constraints c;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        if (pred(Partition(parts))) ++total;
        return true;
    });
    return total;
}

BigInt signed_count(long long n, const std::function<int(const Partition&)>& sgn) {
    BigInt total = 0;
    Constraints c;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        total += sgn(Partition(parts));
        return true;
    });
    return total;
}

constexpr long long kSeriesCap = 2000;
constexpr long long kEnumerationCap = 70;

BigInt series_coefficient_p(long long n) {
    int order = static_cast<int>(n);
    return pochhammer(1, 1, 1, std::nullopt, order).invert().coeff(order);
}

BigInt series_coefficient_q(long long n) {
    int order = static_cast<int>(n);
    return pochhammer(-1, 1, 1, std::nullopt, order).coeff(order);
}

BigInt series_coefficient_qe(long long n) {
    int order = static_cast<int>(n);
    BigInt q = pochhammer(-1, 1, 1, std::nullopt, order).coeff(order);
    BigInt e = pochhammer(1, 1, 1, std::nullopt, order).coeff(order);
    return (q + e) / 2;
}

const std::vector<StatInfo>& registry_storage() {
    static const std::vector<StatInfo> reg = {
        {"p", "partitions of n", false, false},
        {"Q", "partitions of n into distinct parts", false, false},
        {"Q_E", "partitions into distinct parts, even number of parts", false, false},
        {"F", "flushed partitions of n", false, false},
        {"UF", "unflushed partitions of n", false, false},
        {"UF_odd", "unflushed partitions with an odd number of parts", false, false},
        {"UF_even", "unflushed partitions with an even number of parts", false, false},
        {"PR", "proper partitions of n", false, false},
        {"IMPR", "improper partitions of n", false, false},
        {"D_ee", "distinct parts, even count of parts, even smallest part", false, false},
        {"D_eo", "distinct parts, even count of parts, odd smallest part", false, false},
        {"D_oe", "distinct parts, odd count of parts, even smallest part", false, false},
        {"D_oo", "distinct parts, odd count of parts, odd smallest part", false, false},
        {"De_mn", "initial 2-repetitions, even count of once-occurring values; m = distinct values", true, false},
        {"Do_mn", "initial 2-repetitions, odd count of once-occurring values; m = distinct values", true, false},
        {"Ie_mn", "initial 2-repetitions with a repeated value, repeated occurrences even; m = distinct values", true, false},
        {"Io_mn", "initial 2-repetitions with a repeated value, repeated occurrences odd; m = distinct values", true, false},
        {"Se_mn", "distinct-part non-staircase, first gap even; m = number of parts", true, false},
        {"So_mn", "distinct-part non-staircase, first gap odd; m = number of parts", true, false},
        {"N_rank", "partitions of n with rank m (m may be negative)", true, false},
        {"Ne_minus_No", "even-rank partitions minus odd-rank partitions", false, true},
        {"Lo_minus_Le", "distinct parts, odd smallest minus even smallest", false, true},
        {"Po_D", "distinct parts, odd largest part", false, false},
        {"Pe_D", "distinct parts, even largest part", false, false},
        {"frob_no_zero_top", "partitions with no zero in the top diagonal row", false, false},
        {"smallest_missing_odd", "partitions whose smallest missing part is odd", false, false},
        {"X_cor44", "Durfee side absent on top, even bottom count; m = number of parts", true, false},
    };
    return reg;
}

const StatInfo* find_stat(const std::string& key) {
    for (const auto& s : registry_storage())
        if (s.key == key) return &s;
    return nullptr;
}

} // namespace

const std::vector<StatInfo>& statistic_registry() { return registry_storage(); }

bool is_known_statistic(const std::string& key) {
    return find_stat(key) != nullptr;
}

BigInt evaluate_statistic(const std::string& key, long long n,
                          std::optional<long long> m) {
    const StatInfo* info = find_stat(key);
    if (!info) throw RegistryError("unknown statistic: " + key);
    if (n < 0) throw DomainError("n must be nonnegative");
    if (m && !info->takes_m)
        throw DomainError("statistic " + key + " does not take m");

    bool series_backed = key == "p" || key == "Q" || key == "Q_E";
    if (series_backed) {
        if (n > kSeriesCap)
            throw FeasibilityError("series statistics are capped at n <= " +
                                   std::to_string(kSeriesCap));
        if (key == "p") return series_coefficient_p(n);
        if (key == "Q") return series_coefficient_q(n);
        return series_coefficient_qe(n);
    }
    if (n > kEnumerationCap)
        throw FeasibilityError("enumerated statistics are capped at n <= " +
                               std::to_string(kEnumerationCap));

    if (key == "F") return count_where(n, [](const Partition& p) { return is_flushed(p); });
    if (key == "UF") return count_where(n, [](const Partition& p) { return !is_flushed(p); });
    if (key == "UF_odd")
        return count_where(n, [](const Partition& p) {
            return !is_flushed(p) && p.count() % 2 == 1;
        });
    if (key == "UF_even")
        return count_where(n, [](const Partition& p) {
            return !is_flushed(p) && p.count() % 2 == 0;
        });
    if (key == "PR") return count_where(n, [](const Partition& p) { return is_proper(p); });
    if (key == "IMPR") return count_where(n, [](const Partition& p) { return !is_proper(p); });

    if (key.rfind("D_", 0) == 0 && key.size() == 4) {
        bool parts_even = key[2] == 'e';
        bool small_even = key[3] == 'e';
        return count_where(n, [=](const Partition& p) {
            return nonempty_distinct(p) && (p.count() % 2 == 0) == parts_even &&
                   (p.smallest() % 2 == 0) == small_even;
        });
    }

    if (key == "De_mn" || key == "Do_mn") {
        bool want_even = key[1] == 'e';
        return run_table(n, m, [=](const Partition& p, std::map<long long, BigInt>& t) {
            if (!has_initial_repetitions(p, 2)) return;
            RepetitionProfile r = repetition_profile(p);
            if ((r.once % 2 == 0) == want_even) ++t[r.values];
        });
    }
    if (key == "Ie_mn" || key == "Io_mn") {
        bool want_even = key[1] == 'e';
        return run_table(n, m, [=](const Partition& p, std::map<long long, BigInt>& t) {
            if (!has_initial_repetitions(p, 2)) return;
            RepetitionProfile r = repetition_profile(p);
            if (r.once == r.values) return; // no repeated value
            if ((r.repeated_occurrences % 2 == 0) == want_even) ++t[r.values];
        });
    }
    if (key == "Se_mn" || key == "So_mn") {
        bool want_even = key[1] == 'e';
        return run_table(n, m, [=](const Partition& p, std::map<long long, BigInt>& t) {
            if (!nonempty_distinct(p)) return;
            auto g = first_gap_size(p);
            if (!g) return; // consecutive run: a staircase
            if ((*g % 2 == 0) == want_even) ++t[static_cast<long long>(p.count())];
        });
    }
    if (key == "N_rank") {
        return run_table(n, m, [](const Partition& p, std::map<long long, BigInt>& t) {
            ++t[rank(p)];
        });
    }
    if (key == "X_cor44") {
        return run_table(n, m, [](const Partition& p, std::map<long long, BigInt>& t) {
            DurfeeSymbol s = durfee_symbol(p);
            auto in_top = std::count(s.top.begin(), s.top.end(), s.d);
            auto in_bottom = std::count(s.bottom.begin(), s.bottom.end(), s.d);
            if (in_top == 0 && in_bottom % 2 == 0)
                ++t[static_cast<long long>(p.count())];
        });
    }

    if (key == "Ne_minus_No")
        return signed_count(n, [](const Partition& p) {
            return rank(p) % 2 == 0 ? 1 : -1;
        });
    if (key == "Lo_minus_Le")
        return signed_count(n, [](const Partition& p) {
            if (!nonempty_distinct(p)) return 0;
            return p.smallest() % 2 == 1 ? 1 : -1;
        });
    if (key == "Po_D")
        return count_where(n, [](const Partition& p) {
            return nonempty_distinct(p) && p.largest() % 2 == 1;
        });
    if (key == "Pe_D")
        return count_where(n, [](const Partition& p) {
            return nonempty_distinct(p) && p.largest() % 2 == 0;
        });
    if (key == "frob_no_zero_top")
        return count_where(n, [](const Partition& p) {
            return !frobenius_top_contains_zero(p);
        });
    if (key == "smallest_missing_odd")
        return count_where(n, [](const Partition& p) {
            return smallest_missing_part(p) % 2 == 1;
        });

    throw RegistryError("statistic not implemented: " + key);
}

} // namespace partlab

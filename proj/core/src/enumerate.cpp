#include "partlab/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "partlab/errors.hpp"

namespace partlab {

namespace {

struct Enumerator {
    const Constraints& c;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> buffer;
    bool stopped = false;

    bool accept_complete() {
        if (c.exact_parts && static_cast<int>(buffer.size()) != *c.exact_parts)
            return true; // not a match; keep enumerating
        if (c.predicate && !c.predicate(buffer)) return true;
        return visit(buffer);
    }

    // rem: weight still to place; bound: largest value the next part may take.
    void descend(long long rem, int bound) {
        if (stopped) return;
        if (rem == 0) {
            if (!accept_complete()) stopped = true;
            return;
        }
        if (bound <= 0) return;
        if (c.max_parts && static_cast<int>(buffer.size()) >= *c.max_parts)
            return;
        if (c.exact_parts && static_cast<int>(buffer.size()) >= *c.exact_parts)
            return;

        int lo = c.min_part ? std::max(1, *c.min_part) : 1;
        int hi = static_cast<int>(std::min<long long>(bound, rem));
        for (int k = hi; k >= lo; --k) {
            // With all remaining parts capped at k (k-1, k-2, ... when
            // distinct), prune branches that cannot absorb rem.
            long long rest = rem - k;
            if (rest > 0) {
                int next_bound = c.distinct ? k - 1 : k;
                if (next_bound < lo) continue;
                if (c.distinct) {
                    // Largest distinct tail below k: next_bound + ... + lo.
                    long long cap = 0;
                    for (int v = next_bound; v >= lo && cap < rest; --v) cap += v;
                    if (cap < rest) continue;
                }
            }
            buffer.push_back(k);
            descend(rem - k, c.distinct ? k - 1 : k);
            buffer.pop_back();
            if (stopped) return;
        }
    }
};

} // namespace

void for_each_partition(long long n, const Constraints& c,
                        const std::function<bool(const std::vector<int>&)>& visit) {
    if (n < 0) throw DomainError("partition weight must be nonnegative");
    if (n > std::numeric_limits<int>::max())
        throw FeasibilityError("partition weight too large to enumerate");
    if (c.max_part && *c.max_part < 0)
        throw DomainError("max_part must be nonnegative");
    if (c.exact_parts && *c.exact_parts < 0)
        throw DomainError("exact_parts must be nonnegative");
    if (c.max_parts && *c.max_parts < 0)
        throw DomainError("max_parts must be nonnegative");

    Enumerator e{c, visit, {}, false};
    if (n == 0) {
        e.accept_complete();
        return;
    }
    long long bound = n;
    if (c.max_part) bound = std::min<long long>(bound, *c.max_part);
    e.descend(n, static_cast<int>(bound));
}

std::vector<Partition> partitions_of(long long n, const Constraints& c) {
    std::vector<Partition> out;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
        return true;
    });
    return out;
}

BigInt count_partitions(long long n, const Constraints& c) {
    BigInt total = 0;
    for_each_partition(n, c, [&](const std::vector<int>&) {
        ++total;
        return true;
    });
    return total;
}

} // namespace partlab

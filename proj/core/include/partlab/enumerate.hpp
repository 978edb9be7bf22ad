#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/partition.hpp"

namespace partlab {

// Restrictions applied while generating partitions. All are optional
// and combine conjunctively; `predicate` runs last, on complete
// partitions only.
struct Constraints {
    std::optional<int> max_part;
    std::optional<int> min_part;
    std::optional<int> exact_parts;
    std::optional<int> max_parts;
    bool distinct = false;
    std::function<bool(const std::vector<int>&)> predicate;
};

// Visits every partition of n meeting the constraints, in
// lexicographically descending order of the part vectors. The visitor
// receives the working buffer (copy it to keep it) and returns false
// to stop the enumeration early.
void for_each_partition(long long n, const Constraints& c,
                        const std::function<bool(const std::vector<int>&)>& visit);

inline void for_each_partition(long long n,
                               const std::function<bool(const std::vector<int>&)>& visit) {
    for_each_partition(n, Constraints{}, visit);
}

std::vector<Partition> partitions_of(long long n, const Constraints& c = {});

BigInt count_partitions(long long n, const Constraints& c = {});

} // namespace partlab

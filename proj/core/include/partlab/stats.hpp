#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/partition.hpp"

namespace partlab {

// A partition is flushed when the least part value with even
// multiplicity (a missing value counts as having multiplicity zero) is
// even. The empty partition is unflushed: value 1 already has
// multiplicity zero.
bool is_flushed(const Partition& p);

// Proper means the Durfee side d occurs equally often in the top and
// bottom rows of the Durfee symbol. The empty partition is proper.
bool is_proper(const Partition& p);

// True when, for every value j occurring at least k times, each of
// 1, ..., j-1 also occurs at least k times. Values with fewer than k
// occurrences impose nothing. The empty partition qualifies.
bool has_initial_repetitions(const Partition& p, int k);

// Least positive integer that is not a part (1 for the empty partition).
int smallest_missing_part(const Partition& p);

// Scan the parts in increasing order with a virtual 0 prepended and
// return the first neighbour difference exceeding 1, or nullopt when
// the parts (with that 0) form a consecutive run.
std::optional<int> first_gap_size(const Partition& p);

bool frobenius_top_contains_zero(const Partition& p);

// True for the staircase partitions (k, k-1, ..., 2, 1); the empty
// partition is the k = 0 staircase.
bool is_staircase(const Partition& p);

struct StatInfo {
    std::string key;
    std::string summary;
    bool takes_m = false;     // statistic is refined by a second parameter m
    bool is_signed = false;   // value may be negative
};

const std::vector<StatInfo>& statistic_registry();

bool is_known_statistic(const std::string& key);

// Evaluates a registered statistic at n (and m where the statistic is
// refined). Throws RegistryError for unknown keys, DomainError when m
// is required but missing (or given but not accepted), and
// FeasibilityError when n is beyond the supported exact range.
BigInt evaluate_statistic(const std::string& key, long long n,
                          std::optional<long long> m = std::nullopt);

} // namespace partlab

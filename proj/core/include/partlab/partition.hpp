#pragma once

#include <string>
#include <vector>

namespace partlab {

// An integer partition: positive parts in weakly decreasing order.
class Partition {
public:
    Partition() = default;

    // Throws DomainError unless every part is positive and the parts
    // are weakly decreasing.
    explicit Partition(std::vector<int> parts);

    // Sorts the given parts (descending) first, then validates.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int count() const noexcept { return static_cast<int>(parts_.size()); }
    long long weight() const noexcept;
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }
    int multiplicity(int value) const noexcept;
    bool has_distinct_parts() const noexcept;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// The Durfee square has side d; `top` is the conjugate of the columns
// to its right, `bottom` lists the rows below it. Both rows of the
// symbol are weakly decreasing with entries in [1, d] (trailing zeros
// are never stored).
struct DurfeeSymbol {
    int d = 0;
    std::vector<int> top;
    std::vector<int> bottom;

    bool operator==(const DurfeeSymbol&) const = default;
};

// Frobenius coordinates: top[i] and bottom[i] are the arm and leg
// lengths of the i-th diagonal cell. Both rows are strictly decreasing
// and nonnegative, and have equal length (= Durfee side).
struct FrobeniusSymbol {
    std::vector<int> top;
    std::vector<int> bottom;

    bool operator==(const FrobeniusSymbol&) const = default;
};

Partition conjugate(const Partition& p);
int durfee_size(const Partition& p);
DurfeeSymbol durfee_symbol(const Partition& p);
Partition from_durfee_symbol(const DurfeeSymbol& s);
FrobeniusSymbol frobenius_symbol(const Partition& p);
Partition from_frobenius(const FrobeniusSymbol& s);

// largest part minus number of parts; 0 for the empty partition.
int rank(const Partition& p);

std::string to_string(const Partition& p);
std::string to_string(const DurfeeSymbol& s);
std::string to_string(const FrobeniusSymbol& s);

} // namespace partlab

#pragma once

#include <string>
#include <vector>

#include "partlab/partition.hpp"

namespace partlab {

// A concave composition of even length 2m:
//
//   a_1 > a_2 > ... > a_m = b_m < b_{m-1} < ... < b_1,   all entries >= 0.
//
// Both halves are stored largest-first and share the central value
// a_m = b_m, which is counted twice in the weight. The empty
// composition (m = 0) is the unique composition of weight 0; the
// one-element shape "0=0" is excluded so that weight 0 stays unique.
class ConcaveComposition {
public:
    ConcaveComposition() = default;

    // Throws DomainError unless a and b have equal length, are each
    // strictly decreasing and nonnegative, end in the same value, and
    // are not the excluded "0=0" shape.
    ConcaveComposition(std::vector<int> a, std::vector<int> b);

    const std::vector<int>& a() const noexcept { return a_; }
    const std::vector<int>& b() const noexcept { return b_; }
    int length() const noexcept { return static_cast<int>(a_.size()); }
    bool empty() const noexcept { return a_.empty(); }
    long long weight() const noexcept;

    // "3>1=1<2" for a=(3,1), b=(2,1); "(empty)" for m=0.
    std::string display() const;

    bool operator==(const ConcaveComposition&) const = default;

private:
    std::vector<int> a_;
    std::vector<int> b_;
};

// All concave compositions of even length with weight n, ordered by
// length, then by a, then by b (vectors compared lexicographically).
std::vector<ConcaveComposition> concave_even_compositions(long long n);

// Weight-preserving bijection from nonempty concave compositions of
// even length onto improper partitions. Throws DomainError for the
// empty composition.
Partition phi(const ConcaveComposition& c);

// Inverse of phi. Throws DomainError unless p is improper.
ConcaveComposition phi_inverse(const Partition& p);

} // namespace partlab

#include "partlab/concave.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"
#include "partlab/stats.hpp"

namespace partlab {

namespace {

void validate_side(const std::vector<int>& side, const char* which) {
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (side[i] < 0)
            throw DomainError(std::string("concave composition ") + which +
                              " entries must be nonnegative");
        if (i > 0 && side[i] >= side[i - 1])
            throw DomainError(std::string("concave composition ") + which +
                              " side must be strictly decreasing");
    }
}

} // namespace

ConcaveComposition::ConcaveComposition(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size())
        throw DomainError("concave composition sides must have equal length");
    validate_side(a_, "left");
    validate_side(b_, "right");
    if (!a_.empty() && a_.back() != b_.back())
        throw DomainError("concave composition sides must share the central value");
    if (a_.size() == 1 && a_[0] == 0)
        throw DomainError("the one-element shape 0=0 is excluded; "
                          "weight 0 is represented by the empty composition");
}

long long ConcaveComposition::weight() const noexcept {
    long long total = 0;
    for (int x : a_) total += x;
    for (int x : b_) total += x;
    return total;
}

std::string ConcaveComposition::display() const {
    if (a_.empty()) return "(empty)";
    std::ostringstream out;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i > 0) out << ">";
        out << a_[i];
    }
    out << "=";
    for (std::size_t i = b_.size(); i-- > 0;) {
        out << b_[i];
        if (i > 0) out << "<";
    }
    return out.str();
}

std::vector<ConcaveComposition> concave_even_compositions(long long n) {
    if (n < 0) throw DomainError("weight must be nonnegative");
    std::vector<ConcaveComposition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }

    // A side of length m with central value t is t more than a strictly
    // decreasing tail ending in 0; the tail above the last entry is a
    // partition into exactly m-1 distinct positive parts.
    auto sides_with = [](int m, int t, long long s) {
        std::vector<std::vector<int>> res;
        long long tail = s - static_cast<long long>(t) * m;
        if (tail < 0) return res;
        Constraints c;
        c.distinct = true;
        c.exact_parts = m - 1;
        for_each_partition(tail, c, [&](const std::vector<int>& parts) {
            std::vector<int> side;
            side.reserve(static_cast<std::size_t>(m));
            for (int x : parts) side.push_back(x + t);
            side.push_back(t);
            res.push_back(std::move(side));
            return true;
        });
        return res;
    };

    for (int m = 1;; ++m) {
        // Minimal weight at length m: both sides (m-1, ..., 1, 0).
        long long min_w = static_cast<long long>(m) * (m - 1);
        if (min_w > n) break;
        for (int t = 0; min_w + 2LL * t * m <= n; ++t) {
            for (long long sa = 0; sa <= n; ++sa) {
                auto A = sides_with(m, t, sa);
                if (A.empty()) continue;
                auto B = sides_with(m, t, n - sa);
                for (const auto& a : A)
                    for (const auto& b : B)
                        out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ConcaveComposition& x, const ConcaveComposition& y) {
                  if (x.length() != y.length()) return x.length() < y.length();
                  if (x.a() != y.a()) return x.a() < y.a();
                  return x.b() < y.b();
              });
    return out;
}

namespace {

// Rows of the image partition: row i (1-based, i <= m) has (i-1) + r_i
// cells; row i > m has one cell for every 1-based position j with
// j + c_j >= i. Zero rows are dropped.
std::vector<int> build_rows(const std::vector<int>& r, const std::vector<int>& c) {
    int m = static_cast<int>(r.size());
    std::vector<int> rows;
    for (int i = 0; i < m; ++i) rows.push_back(i + r[static_cast<std::size_t>(i)]);
    for (int i = m + 1;; ++i) {
        int cnt = 0;
        for (int j = 0; j < m; ++j)
            if (j + 1 + c[static_cast<std::size_t>(j)] >= i) ++cnt;
        if (cnt == 0) break;
        rows.push_back(cnt);
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

} // namespace

Partition phi(const ConcaveComposition& c) {
    if (c.empty())
        throw DomainError("phi is defined on nonempty concave compositions");
    const std::vector<int>& a = c.a();
    const std::vector<int>& b = c.b();
    std::size_t m = a.size();
    if (a[m - 1] != 0) return conjugate(Partition(build_rows(b, a)));
    // Central value 0 forces m >= 2 (the shape 0=0 is excluded).
    if (a[m - 2] == b[m - 2]) return Partition(build_rows(a, b));
    if (a[m - 2] > b[m - 2]) return conjugate(Partition(build_rows(b, a)));
    return Partition(build_rows(a, b));
}

ConcaveComposition phi_inverse(const Partition& p) {
    if (is_proper(p))
        throw DomainError("phi_inverse is defined on improper partitions");
    DurfeeSymbol ds = durfee_symbol(p);
    int d = ds.d;
    auto count_d = [&](const std::vector<int>& row) {
        return static_cast<int>(std::count(row.begin(), row.end(), d));
    };
    int delta = count_d(ds.top) - count_d(ds.bottom);
    Partition pc = conjugate(p);

    std::vector<int> a, b;
    if (delta == 1) {
        int m = d;
        for (int i = 0; i < m; ++i) a.push_back(p.part(i) - (i + 1));
        for (int j = 0; j < m; ++j) b.push_back(pc.part(j) - j);
    } else if (delta >= 2) {
        int m = d + 1;
        for (int i = 0; i < m - 1; ++i) a.push_back(p.part(i) - (i + 1));
        a.push_back(0);
        for (int j = 0; j < m - 1; ++j) b.push_back(pc.part(j) - j);
        b.push_back(0);
    } else {
        // delta <= -1: the left side reads rows through the square's
        // next row; the right side rebuilds from the rows below it.
        int m = d + 1;
        for (int i = 0; i < (delta == -1 ? m : m - 1); ++i)
            a.push_back(p.part(i) - i);
        if (delta <= -2) a.push_back(0);
        std::vector<int> below(p.parts().begin() + m, p.parts().end());
        Partition cb = conjugate(Partition(std::move(below)));
        for (int j = 0; j < m - 1; ++j) {
            int base = j < cb.count() ? cb.part(j) : 0;
            b.push_back(base + m - (j + 1));
        }
        b.push_back(0);
    }

    ConcaveComposition result(std::move(a), std::move(b));
    if (!(phi(result) == p))
        throw std::logic_error("phi_inverse round-trip failed; this is a bug");
    return result;
}

} // namespace partlab

#include "partlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "partlab/errors.hpp"

namespace partlab {

namespace {

std::string join_parts(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ",";
        out << v[i];
    }
    return out.str();
}

// conj[i] = #{j : parts[j] > i}, for a weakly decreasing nonnegative list.
std::vector<int> conjugate_parts(const std::vector<int>& parts) {
    std::vector<int> conj;
    if (parts.empty()) return conj;
    conj.reserve(static_cast<std::size_t>(parts.front()));
    for (int i = 0; i < parts.front(); ++i) {
        int cnt = 0;
        for (int part : parts) {
            if (part > i)
                ++cnt;
            else
                break;
        }
        conj.push_back(cnt);
    }
    return conj;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

long long Partition::weight() const noexcept {
    long long total = 0;
    for (int part : parts_) total += part;
    return total;
}

int Partition::multiplicity(int value) const noexcept {
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), value,
                               std::greater<int>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), value,
                               std::greater<int>());
    return static_cast<int>(hi - lo);
}

bool Partition::has_distinct_parts() const noexcept {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    return Partition(conjugate_parts(p.parts()));
}

int durfee_size(const Partition& p) {
    int d = 0;
    const auto& parts = p.parts();
    while (d < p.count() && parts[static_cast<std::size_t>(d)] >= d + 1) ++d;
    return d;
}

DurfeeSymbol durfee_symbol(const Partition& p) {
    DurfeeSymbol s;
    s.d = durfee_size(p);
    const auto& parts = p.parts();
    // Columns to the right of the square, read as a partition and
    // conjugated: entries count rows (among the first d) that extend
    // past each column.
    std::vector<int> residue;
    for (int i = 0; i < s.d; ++i) {
        int extra = parts[static_cast<std::size_t>(i)] - s.d;
        if (extra > 0) residue.push_back(extra);
    }
    s.top = conjugate_parts(residue);
    for (int i = s.d; i < p.count(); ++i)
        s.bottom.push_back(parts[static_cast<std::size_t>(i)]);
    return s;
}

Partition from_durfee_symbol(const DurfeeSymbol& s) {
    if (s.d < 0) throw DomainError("Durfee side must be nonnegative");
    auto check_row = [&](const std::vector<int>& row, const char* which) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 1 || row[i] > s.d)
                throw DomainError(std::string("Durfee symbol ") + which +
                                  " row entries must lie in [1, d]");
            if (i > 0 && row[i] > row[i - 1])
                throw DomainError(std::string("Durfee symbol ") + which +
                                  " row must be weakly decreasing");
        }
    };
    check_row(s.top, "top");
    check_row(s.bottom, "bottom");

    std::vector<int> parts;
    // Row i of the first d rows: d cells of the square plus one cell
    // for every top entry exceeding i.
    for (int i = 0; i < s.d; ++i) {
        int extra = 0;
        for (int t : s.top) {
            if (t > i)
                ++extra;
            else
                break;
        }
        parts.push_back(s.d + extra);
    }
    for (int b : s.bottom) parts.push_back(b);
    Partition p(std::move(parts));
    if (durfee_size(p) != s.d)
        throw DomainError("Durfee symbol rows overflow the declared square");
    return p;
}

FrobeniusSymbol frobenius_symbol(const Partition& p) {
    FrobeniusSymbol s;
    int d = durfee_size(p);
    Partition conj = conjugate(p);
    for (int i = 0; i < d; ++i) {
        s.top.push_back(p.part(i) - (i + 1));
        s.bottom.push_back(conj.part(i) - (i + 1));
    }
    return s;
}

Partition from_frobenius(const FrobeniusSymbol& s) {
    if (s.top.size() != s.bottom.size())
        throw DomainError("Frobenius rows must have equal length");
    auto check_row = [](const std::vector<int>& row, const char* which) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0)
                throw DomainError(std::string("Frobenius ") + which +
                                  " row entries must be nonnegative");
            if (i > 0 && row[i] >= row[i - 1])
                throw DomainError(std::string("Frobenius ") + which +
                                  " row must be strictly decreasing");
        }
    };
    check_row(s.top, "top");
    check_row(s.bottom, "bottom");

    int r = static_cast<int>(s.top.size());
    std::vector<int> parts;
    for (int i = 0; i < r; ++i)
        parts.push_back(s.top[static_cast<std::size_t>(i)] + i + 1);
    // Column j (1-based, j <= r) of the partition has length
    // bottom[j-1] + j; rows past the square collect the columns that
    // reach them.
    int max_row = r == 0 ? 0 : s.bottom.front() + 1;
    for (int i = r + 1; i <= max_row; ++i) {
        int len = 0;
        for (int j = 1; j <= r; ++j) {
            if (s.bottom[static_cast<std::size_t>(j - 1)] + j >= i)
                ++len;
            else
                break;
        }
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

int rank(const Partition& p) {
    return p.largest() - p.count();
}

std::string to_string(const Partition& p) {
    return "(" + join_parts(p.parts()) + ")";
}

std::string to_string(const DurfeeSymbol& s) {
    std::ostringstream out;
    out << "[d=" << s.d << "; " << join_parts(s.top) << " | "
        << join_parts(s.bottom) << "]";
    return out.str();
}

std::string to_string(const FrobeniusSymbol& s) {
    std::ostringstream out;
    out << "(" << join_parts(s.top) << " | " << join_parts(s.bottom) << ")";
    return out.str();
}

} // namespace partlab

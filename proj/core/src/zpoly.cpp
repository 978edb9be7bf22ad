#include "partlab/zpoly.hpp"

#include <sstream>

#include "partlab/errors.hpp"

namespace partlab {

ZPoly::ZPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

ZPoly ZPoly::monomial(BigInt c, int k) {
    if (k < 0) throw DomainError("z-degree must be nonnegative");
    ZPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

BigInt ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

void ZPoly::add_term(const BigInt& c, int k) {
    if (k < 0) throw DomainError("z-degree must be nonnegative");
    if (c == 0) return;
    if (k >= static_cast<int>(coeffs_.size()))
        coeffs_.resize(static_cast<std::size_t>(k) + 1, BigInt(0));
    coeffs_[static_cast<std::size_t>(k)] += c;
    trim();
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

ZPoly ZPoly::operator+(const ZPoly& other) const {
    ZPoly out = *this;
    out += other;
    return out;
}

ZPoly ZPoly::operator-(const ZPoly& other) const {
    ZPoly out = *this;
    out -= other;
    return out;
}

ZPoly ZPoly::operator*(const ZPoly& other) const {
    ZPoly out;
    if (coeffs_.empty() || other.coeffs_.empty()) return out;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    out.trim();
    return out;
}

ZPoly ZPoly::operator*(const BigInt& scalar) const {
    ZPoly out;
    if (scalar == 0) return out;
    out.coeffs_ = coeffs_;
    for (auto& c : out.coeffs_) c *= scalar;
    return out;
}

ZPoly ZPoly::shifted(int k) const {
    if (k < 0) throw DomainError("z-shift must be nonnegative");
    ZPoly out;
    if (coeffs_.empty()) return out;
    out.coeffs_.assign(static_cast<std::size_t>(k), BigInt(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

BigInt ZPoly::value_at_one() const {
    BigInt total = 0;
    for (const auto& c : coeffs_) total += c;
    return total;
}

BigInt ZPoly::value_at(const BigInt& z) const {
    BigInt total = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        total = total * z + *it;
    return total;
}

std::string ZPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.str();
        if (k >= 1) {
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace partlab

#pragma once

#include <string>
#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

// Polynomial in z with BigInt coefficients; the coefficient of one
// q-degree in a bivariate series. Trailing zero coefficients are
// trimmed so that degree() is exact.
class ZPoly {
public:
    ZPoly() = default; // zero polynomial

    // coefficients[k] is the coefficient of z^k.
    explicit ZPoly(std::vector<BigInt> coefficients);

    static ZPoly monomial(BigInt c, int k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    void add_term(const BigInt& c, int k);

    ZPoly& operator+=(const ZPoly& other);
    ZPoly& operator-=(const ZPoly& other);
    ZPoly operator+(const ZPoly& other) const;
    ZPoly operator-(const ZPoly& other) const;
    ZPoly operator*(const ZPoly& other) const;
    ZPoly operator*(const BigInt& scalar) const;

    // Multiplied by z^k (k >= 0).
    ZPoly shifted(int k) const;

    bool operator==(const ZPoly&) const = default;

    // Sum of all coefficients: the value at z = 1.
    BigInt value_at_one() const;
    // Alternating sum: the value at z = -1.
    BigInt value_at(const BigInt& z) const;

    // "3z^2 - z + 1"; "0" for zero.
    std::string str() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

} // namespace partlab

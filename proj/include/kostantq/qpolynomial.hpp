#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kostantq/bigint.hpp"

namespace kostantq {

/// Polynomial in the formal variable q with arbitrary-precision integer
/// coefficients. Stored densely, ascending degree, trailing zeros trimmed,
/// so structural equality coincides with mathematical equality. The zero
/// polynomial is the empty coefficient sequence and its degree is "minus
/// infinity", reported as std::nullopt.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long constant);  // NOLINT(google-explicit-constructor)
    explicit QPolynomial(BigInt constant);
    explicit QPolynomial(std::vector<BigInt> ascending_coeffs);
    QPolynomial(std::initializer_list<long long> ascending_coeffs);

    /// coeff * q^degree
    static QPolynomial monomial(std::size_t degree, BigInt coeff = BigInt(1));
    /// The generator q.
    static QPolynomial q() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    /// Coefficient of q^i; zero beyond the degree.
    const BigInt& coeff(std::size_t i) const noexcept;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt leading_coeff() const;  // 0 for the zero polynomial

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);

    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    friend bool operator==(const QPolynomial& lhs, const QPolynomial& rhs) = default;

    QPolynomial scaled(const BigInt& factor) const;
    QPolynomial shifted(std::size_t k) const;  // multiply by q^k
    QPolynomial pow(unsigned exponent) const;

    /// Horner evaluation at an integer point.
    BigInt eval(const BigInt& point) const;
    BigInt value_at_one() const { return eval(BigInt(1)); }

    /// gcd of all |coefficients|; 0 for the zero polynomial.
    BigInt content() const;

    /// Descending-degree text, `^` for powers, `*` omitted:
    /// "q^7 + 3q^6 + 8q^5 + 11q^4 + 11q^3 + 5q^2 + q".
    std::string to_string() const;

    /// Decimal coefficient strings, ascending degree (the JSON rendering).
    std::vector<std::string> coeff_strings() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Primitive polynomial gcd with positive leading coefficient; handles
/// integer contents separately from the primitive parts. gcd(0, 0) = 0.
QPolynomial poly_gcd(const QPolynomial& a, const QPolynomial& b);

/// Quotient a / b when the division is exact over the integers,
/// std::nullopt otherwise. b must be nonzero.
std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& b);

}  // namespace kostantq

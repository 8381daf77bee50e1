#pragma once

#include <string>

#include "kostantq/qpolynomial.hpp"

namespace kostantq {

/// Fully reduced quotient of two integer polynomials in q. Invariants held by
/// every constructor and operation: the denominator is nonzero with positive
/// leading coefficient, and numerator/denominator share no polynomial factor
/// and no integer content. Equality is therefore structural.
class RationalQ {
public:
    RationalQ() : den_(1) {}
    RationalQ(long long constant) : num_(constant), den_(1) {}  // NOLINT
    explicit RationalQ(QPolynomial numerator) : num_(std::move(numerator)), den_(1) {}
    RationalQ(QPolynomial numerator, QPolynomial denominator);

    const QPolynomial& num() const noexcept { return num_; }
    const QPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    /// Exact polynomial value; throws NotPolynomial when the reduced
    /// denominator is not 1.
    QPolynomial to_polynomial() const;

    RationalQ operator-() const;
    RationalQ inverse() const;  // throws DivisionByZero on zero

    friend RationalQ operator+(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator-(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator/(const RationalQ& a, const RationalQ& b);
    RationalQ& operator+=(const RationalQ& rhs) { return *this = *this + rhs; }
    RationalQ& operator-=(const RationalQ& rhs) { return *this = *this - rhs; }
    RationalQ& operator*=(const RationalQ& rhs) { return *this = *this * rhs; }
    RationalQ& operator/=(const RationalQ& rhs) { return *this = *this / rhs; }

    friend bool operator==(const RationalQ& a, const RationalQ& b) = default;

    std::string to_string() const;  // "(<num>)/(<den>)"

private:
    void reduce();

    QPolynomial num_;
    QPolynomial den_;
};

}  // namespace kostantq

#pragma once

#include <string>

#include "kostantq/rational_q.hpp"

namespace kostantq {

/// Element a + b*s of the quadratic extension of the rational function field,
/// where s^2 rewrites to q^2 + 4. Closed under +, -, *, / via the rewrite
/// rule and conjugate division; every component stays fully reduced.
class SurdElement {
public:
    SurdElement() = default;
    SurdElement(long long constant) : rat_(constant) {}  // NOLINT
    explicit SurdElement(RationalQ rat, RationalQ surd = RationalQ())
        : rat_(std::move(rat)), surd_(std::move(surd)) {}

    /// The generator s with s^2 = q^2 + 4.
    static SurdElement radical() { return SurdElement(RationalQ(0), RationalQ(1)); }
    /// q^2 + 4 as a field element.
    static RationalQ radicand();

    const RationalQ& rat() const noexcept { return rat_; }
    const RationalQ& surd() const noexcept { return surd_; }

    bool is_zero() const noexcept { return rat_.is_zero() && surd_.is_zero(); }

    /// Surd-free with denominator 1 — collapses to an honest polynomial.
    bool is_polynomial() const noexcept { return surd_.is_zero() && rat_.is_polynomial(); }
    QPolynomial to_polynomial() const;  // throws NotPolynomial otherwise

    SurdElement conjugate() const;  // s -> -s, a ring automorphism
    SurdElement operator-() const;
    SurdElement inverse() const;  // throws DivisionByZero on zero
    SurdElement pow(unsigned exponent) const;

    friend SurdElement operator+(const SurdElement& a, const SurdElement& b);
    friend SurdElement operator-(const SurdElement& a, const SurdElement& b);
    friend SurdElement operator*(const SurdElement& a, const SurdElement& b);
    friend SurdElement operator/(const SurdElement& a, const SurdElement& b);
    SurdElement& operator+=(const SurdElement& rhs) { return *this = *this + rhs; }
    SurdElement& operator-=(const SurdElement& rhs) { return *this = *this - rhs; }
    SurdElement& operator*=(const SurdElement& rhs) { return *this = *this * rhs; }
    SurdElement& operator/=(const SurdElement& rhs) { return *this = *this / rhs; }

    friend bool operator==(const SurdElement& a, const SurdElement& b) = default;

    std::string to_string() const;  // "(<num>/<den>) + (<num>/<den>)*s"

private:
    RationalQ rat_;
    RationalQ surd_;
};

}  // namespace kostantq

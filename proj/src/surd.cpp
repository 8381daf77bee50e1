#include "kostantq/surd.hpp"

#include "kostantq/errors.hpp"

namespace kostantq {

RationalQ SurdElement::radicand() { return RationalQ(QPolynomial{4, 0, 1}); }

QPolynomial SurdElement::to_polynomial() const {
    if (!surd_.is_zero()) throw NotPolynomial(to_string());
    return rat_.to_polynomial();
}

SurdElement SurdElement::conjugate() const { return SurdElement(rat_, -surd_); }

SurdElement SurdElement::operator-() const { return SurdElement(-rat_, -surd_); }

SurdElement SurdElement::inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 (q^2+4)); the norm vanishes only
    // at zero since q^2 + 4 is not a square in the rational function field.
    const RationalQ norm = rat_ * rat_ - surd_ * surd_ * radicand();
    if (norm.is_zero()) throw DivisionByZero("SurdElement: inverse of zero");
    return SurdElement(rat_ / norm, -surd_ / norm);
}

SurdElement SurdElement::pow(unsigned exponent) const {
    SurdElement result(1);
    SurdElement base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

SurdElement operator+(const SurdElement& a, const SurdElement& b) {
    return SurdElement(a.rat_ + b.rat_, a.surd_ + b.surd_);
}

SurdElement operator-(const SurdElement& a, const SurdElement& b) {
    return SurdElement(a.rat_ - b.rat_, a.surd_ - b.surd_);
}

SurdElement operator*(const SurdElement& a, const SurdElement& b) {
    return SurdElement(a.rat_ * b.rat_ + a.surd_ * b.surd_ * SurdElement::radicand(),
                       a.rat_ * b.surd_ + a.surd_ * b.rat_);
}

SurdElement operator/(const SurdElement& a, const SurdElement& b) { return a * b.inverse(); }

std::string SurdElement::to_string() const {
    return "(" + rat_.num().to_string() + "/" + rat_.den().to_string() + ") + (" +
           surd_.num().to_string() + "/" + surd_.den().to_string() + ")*s";
}

}  // namespace kostantq

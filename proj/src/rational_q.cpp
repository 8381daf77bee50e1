#include "kostantq/rational_q.hpp"

#include <stdexcept>
#include <utility>

#include "kostantq/errors.hpp"

namespace kostantq {

RationalQ::RationalQ(QPolynomial numerator, QPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("RationalQ: zero denominator");
    reduce();
}

void RationalQ::reduce() {
    if (num_.is_zero()) {
        den_ = QPolynomial(1);
        return;
    }
    const QPolynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        auto qn = divide_exact(num_, g);
        auto qd = divide_exact(den_, g);
        if (!qn || !qd) throw std::logic_error("RationalQ: gcd does not divide");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    const BigInt c = big_gcd(num_.content(), den_.content());
    if (c > 1) {
        auto qn = divide_exact(num_, QPolynomial(c));
        auto qd = divide_exact(den_, QPolynomial(c));
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QPolynomial RationalQ::to_polynomial() const {
    if (!den_.is_one()) throw NotPolynomial(to_string());
    return num_;
}

RationalQ RationalQ::operator-() const {
    RationalQ out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalQ RationalQ::inverse() const {
    if (is_zero()) throw DivisionByZero("RationalQ: inverse of zero");
    return RationalQ(den_, num_);
}

RationalQ operator+(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQ operator-(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQ operator/(const RationalQ& a, const RationalQ& b) {
    if (b.is_zero()) throw DivisionByZero("RationalQ: division by zero");
    return RationalQ(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalQ::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace kostantq

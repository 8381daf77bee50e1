#include "kostantq/qpolynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace kostantq {

QPolynomial::QPolynomial(long long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

QPolynomial::QPolynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<BigInt> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

QPolynomial::QPolynomial(std::initializer_list<long long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long long c : ascending_coeffs) coeffs_.emplace_back(c);
    trim();
}

QPolynomial QPolynomial::monomial(std::size_t degree, BigInt coeff) {
    QPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, BigInt(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const BigInt& QPolynomial::coeff(std::size_t i) const noexcept {
    static const BigInt zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigInt QPolynomial::leading_coeff() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    QPolynomial out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

QPolynomial QPolynomial::scaled(const BigInt& factor) const {
    if (factor == 0) return {};
    QPolynomial out(*this);
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    QPolynomial out;
    out.coeffs_.assign(coeffs_.size() + k, BigInt(0));
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

QPolynomial QPolynomial::pow(unsigned exponent) const {
    QPolynomial result(1);
    QPolynomial base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

BigInt QPolynomial::eval(const BigInt& point) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

BigInt QPolynomial::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return big_abs(g);
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt mag = big_abs(c);
        if (mag != 1 || k == 0) out += mag.str();
        if (k == 1) {
            out += "q";
        } else if (k >= 2) {
            out += "q^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::string> QPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

namespace {

QPolynomial primitive_part(const QPolynomial& p) {
    if (p.is_zero()) return p;
    const BigInt c = p.content();
    if (c == 1) return p;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) out.push_back(x / c);
    return QPolynomial(std::move(out));
}

// Pseudo-remainder of a by b up to a power of lc(b); only used modulo
// primitive parts, so the stray factor is irrelevant.
QPolynomial pseudo_rem(QPolynomial a, const QPolynomial& b) {
    const std::size_t db = *b.degree();
    const BigInt lb = b.leading_coeff();
    while (!a.is_zero() && *a.degree() >= db) {
        const std::size_t shift = *a.degree() - db;
        const BigInt la = a.leading_coeff();
        a = a.scaled(lb) - b.scaled(la).shifted(shift);
    }
    return a;
}

}  // namespace

QPolynomial poly_gcd(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial u = primitive_part(a);
    QPolynomial v = primitive_part(b);
    if (u.is_zero()) std::swap(u, v);
    while (!v.is_zero()) {
        QPolynomial r = primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading_coeff() < 0) u = -u;
    return u;
}

std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (a.is_zero()) return QPolynomial();
    if (*a.degree() < *b.degree()) return std::nullopt;

    std::vector<BigInt> rem = a.coeffs();
    const std::size_t dq = *a.degree() - *b.degree();
    std::vector<BigInt> quot(dq + 1, BigInt(0));
    const BigInt& lb = b.leading_coeff();
    for (std::size_t k = dq + 1; k-- > 0;) {
        BigInt& top = rem[k + *b.degree()];
        if (top == 0) continue;
        if (top % lb != 0) return std::nullopt;
        BigInt f = top / lb;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) rem[k + j] -= f * b.coeffs()[j];
        quot[k] = std::move(f);
    }
    for (const auto& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return QPolynomial(std::move(quot));
}

}  // namespace kostantq

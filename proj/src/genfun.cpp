#include "kostantq/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "kostantq/errors.hpp"

namespace kostantq {
namespace genfun {

namespace {

std::vector<QPolynomial> shared_denominator() {
    // 1 - (2 + 2q + q^2) x + (1 + 2q + q^2 + q^3) x^2
    return {QPolynomial(1), -QPolynomial{2, 2, 1}, QPolynomial{1, 2, 1, 1}};
}

// Renders one x-term; `body` carries no sign of its own and is parenthesized
// unless `plain`.
void render_term(const std::string& body_in, bool plain, bool negative, std::size_t power,
                 bool& first, std::string& out) {
    std::string body = body_in;
    if (first) {
        out += negative ? "-" : "";
        first = false;
    } else {
        out += negative ? " - " : " + ";
    }
    if (!plain) body = "(" + body + ")";
    if (power == 0) {
        out += body;
        return;
    }
    if (body != "1") out += body;
    out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
}

std::string render_poly_in_x(const std::vector<QPolynomial>& coeffs) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const bool negative = coeffs[k].leading_coeff() < 0;
        const QPolynomial display = negative ? -coeffs[k] : coeffs[k];
        const auto& cs = display.coeffs();
        const std::size_t terms = static_cast<std::size_t>(
            std::count_if(cs.begin(), cs.end(), [](const BigInt& c) { return c != 0; }));
        render_term(display.to_string(), terms == 1, negative, k, first, out);
    }
    return out.empty() ? "0" : out;
}

std::string render_poly_in_x(const std::vector<BigInt>& coeffs) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const bool negative = coeffs[k] < 0;
        render_term(big_abs(coeffs[k]).str(), true, negative, k, first, out);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string GenFun::to_string() const {
    return "(" + render_poly_in_x(numerator) + ")/(" + render_poly_in_x(denominator) + ")";
}

std::string IntegerGenFun::to_string() const {
    return "(" + render_poly_in_x(numerator) + ")/(" + render_poly_in_x(denominator) + ")";
}

GenFun series_for(Family f, Variant variant) {
    if (variant != Variant::full && f != Family::B)
        throw UnsupportedVariant("split series variants exist only for family B");

    GenFun g;
    g.denominator = shared_denominator();
    switch (f) {
        case Family::A:
            throw UnsupportedVariant("no rational series for family A; use the recurrence");
        case Family::B:
            switch (variant) {
                case Variant::full:
                    // qx + (-q - q^2) x^2 + q^2 x^3
                    g.numerator = {QPolynomial(), QPolynomial{0, 1}, QPolynomial{0, -1, -1},
                                   QPolynomial{0, 0, 1}};
                    break;
                case Variant::b_nonhooked:
                    // qx + (-2q - q^2) x^2 + (q + q^2) x^3
                    g.numerator = {QPolynomial(), QPolynomial{0, 1}, QPolynomial{0, -2, -1},
                                   QPolynomial{0, 1, 1}};
                    break;
                case Variant::b_hooked:
                    // qx^2 - qx^3
                    g.numerator = {QPolynomial(), QPolynomial(), QPolynomial{0, 1},
                                   QPolynomial{0, -1}};
                    break;
            }
            break;
        case Family::C:
            g.numerator = {QPolynomial(), QPolynomial{0, 1}, QPolynomial{0, -1, -1}};
            break;
        case Family::D:
            // (q + 4q^2 + 6q^3 + 3q^4 + q^5) x^4 - (q + 4q^2 + 6q^3 + 5q^4 + 3q^5 + q^6) x^5
            g.numerator = {QPolynomial(),
                           QPolynomial(),
                           QPolynomial(),
                           QPolynomial(),
                           QPolynomial{0, 1, 4, 6, 3, 1},
                           -QPolynomial{0, 1, 4, 6, 5, 3, 1}};
            g.first_index = 4;
            break;
    }
    return g;
}

std::vector<QPolynomial> expand(const GenFun& g, int terms) {
    if (terms < 1) throw std::invalid_argument("expand: terms must be >= 1");
    std::vector<QPolynomial> out(static_cast<std::size_t>(terms) + 1);
    for (int k = 1; k <= terms; ++k) {
        QPolynomial c = k < static_cast<int>(g.numerator.size()) ? g.numerator[k] : QPolynomial();
        for (std::size_t j = 1; j < g.denominator.size() && j <= static_cast<std::size_t>(k); ++j)
            c -= g.denominator[j] * out[static_cast<std::size_t>(k) - j];
        out[static_cast<std::size_t>(k)] = std::move(c);
    }
    out.erase(out.begin());
    return out;
}

IntegerGenFun specialize_q1(const GenFun& g) {
    IntegerGenFun out;
    out.first_index = g.first_index;
    out.numerator.reserve(g.numerator.size());
    for (const auto& p : g.numerator) out.numerator.push_back(p.value_at_one());
    out.denominator.reserve(g.denominator.size());
    for (const auto& p : g.denominator) out.denominator.push_back(p.value_at_one());
    return out;
}

std::vector<BigInt> expand(const IntegerGenFun& g, int terms) {
    if (terms < 1) throw std::invalid_argument("expand: terms must be >= 1");
    std::vector<BigInt> out(static_cast<std::size_t>(terms) + 1, BigInt(0));
    for (int k = 1; k <= terms; ++k) {
        BigInt c = k < static_cast<int>(g.numerator.size()) ? g.numerator[k] : BigInt(0);
        for (std::size_t j = 1; j < g.denominator.size() && j <= static_cast<std::size_t>(k); ++j)
            c -= g.denominator[j] * out[static_cast<std::size_t>(k) - j];
        out[static_cast<std::size_t>(k)] = std::move(c);
    }
    out.erase(out.begin());
    return out;
}

}  // namespace genfun
}  // namespace kostantq

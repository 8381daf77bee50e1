#include "kostantq/closed_form.hpp"

#include "kostantq/errors.hpp"

namespace kostantq {
namespace closed_form {

namespace {

SurdElement rational(std::initializer_list<long long> ascending) {
    return SurdElement(RationalQ(QPolynomial(ascending)));
}

ClosedFormConstants build() {
    const SurdElement s = SurdElement::radical();
    const SurdElement q = rational({0, 1});
    const SurdElement two = rational({2});
    const SurdElement two_q2p4 = rational({8, 0, 2});  // 2(q^2 + 4)

    ClosedFormConstants k;
    k.beta1 = (rational({2, 2, 1}) + q * s) / two;
    k.beta2 = k.beta1.conjugate();

    // q * (q^4 + q^3 + 5q^2 + 4q + 4 + (q^3 + q^2 + 3q + 2) s) / (2(q^2+4))
    k.alpha1 = q * (rational({4, 4, 5, 1, 1}) + rational({2, 3, 1, 1}) * s) / two_q2p4;
    k.alpha2 = k.alpha1.conjugate();

    // q * (q^2 + 4 + q s) / (2(q^2+4))
    k.gamma1 = q * (rational({4, 0, 1}) + q * s) / two_q2p4;
    k.gamma2 = k.gamma1.conjugate();

    // q * (q^5 + 3q^4 + 8q^3 + 12q^2 + 9q + 2 + (q^4 + 3q^3 + 6q^2 + 4q + 1) s) / (2s);
    // dividing by s rationalizes the denominator.
    k.delta1 = q * (rational({2, 9, 12, 8, 3, 1}) + rational({1, 4, 6, 3, 1}) * s) / (two * s);
    k.delta2 = k.delta1.conjugate();
    return k;
}

}  // namespace

const ClosedFormConstants& constants() {
    static const ClosedFormConstants k = build();
    return k;
}

std::optional<int> min_closed_rank(Family f) {
    switch (f) {
        case Family::A: return std::nullopt;
        case Family::B: return 2;
        case Family::C: return 1;
        case Family::D: return 4;
    }
    return std::nullopt;
}

QPolynomial value(const LieType& t) {
    t.validate();
    const auto min = min_closed_rank(t.family);
    if (!min)
        throw UnsupportedVariant("no closed formula for family A; use the recurrence");
    if (t.rank < *min)
        throw InvalidRank("closed formula for type " + std::string(1, family_letter(t.family)) +
                          " requires rank >= " + std::to_string(*min));

    const auto& k = constants();
    const SurdElement *first = nullptr, *second = nullptr;
    unsigned exponent = 0;
    switch (t.family) {
        case Family::B:
            first = &k.alpha1;
            second = &k.alpha2;
            exponent = static_cast<unsigned>(t.rank - 2);
            break;
        case Family::C:
            first = &k.gamma1;
            second = &k.gamma2;
            exponent = static_cast<unsigned>(t.rank - 1);
            break;
        case Family::D:
            first = &k.delta1;
            second = &k.delta2;
            exponent = static_cast<unsigned>(t.rank - 4);
            break;
        case Family::A: break;  // unreachable
    }
    const SurdElement combo =
        *first * k.beta1.pow(exponent) + *second * k.beta2.pow(exponent);
    return combo.to_polynomial();
}

}  // namespace closed_form
}  // namespace kostantq

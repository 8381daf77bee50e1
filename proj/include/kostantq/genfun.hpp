#pragma once

#include <string>
#include <vector>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/root_systems.hpp"

namespace kostantq {
namespace genfun {

enum class Variant { full, b_nonhooked, b_hooked };

/// Rational function in x whose x^r coefficient is the count polynomial for
/// rank r. Numerator and denominator are stored as explicit coefficient
/// sequences (index = power of x); the denominator's constant term is the
/// polynomial 1, so the power-series inverse is well defined. Every instance
/// here shares the same quadratic denominator.
struct GenFun {
    std::vector<QPolynomial> numerator;
    std::vector<QPolynomial> denominator;
    int first_index = 1;  // smallest rank with a defined value

    std::string to_string() const;  // "(<num>)/(<den>)"
};

/// The closed-form series for families B, C, D, plus the type B split
/// variants. Throws UnsupportedVariant for family A or for split variants
/// outside family B.
GenFun series_for(Family f, Variant variant = Variant::full);

/// Coefficients of x^1 .. x^terms, expanded through the linear recurrence the
/// denominator induces. Entry [r-1] is the rank r value; ranks below
/// first_index come out zero.
std::vector<QPolynomial> expand(const GenFun& g, int terms);

/// The q = 1 specialization: same rational function with integer
/// coefficients, fraction left unreduced.
struct IntegerGenFun {
    std::vector<BigInt> numerator;
    std::vector<BigInt> denominator;
    int first_index = 1;

    std::string to_string() const;
};

IntegerGenFun specialize_q1(const GenFun& g);

std::vector<BigInt> expand(const IntegerGenFun& g, int terms);

}  // namespace genfun
}  // namespace kostantq

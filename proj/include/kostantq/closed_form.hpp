#pragma once

#include <optional>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/root_systems.hpp"
#include "kostantq/surd.hpp"

namespace kostantq {
namespace closed_form {

/// The eight constants of the explicit formulas, in canonical a + b*s form
/// with s^2 = q^2 + 4. beta1/beta2 are the roots of
/// t^2 - (2+2q+q^2) t + (1+2q+q^2+q^3); the alpha/gamma/delta pairs solve the
/// rank-anchored linear systems for families B, C, D respectively, with
/// delta's printed 1/(2s) denominators rationalized on construction.
struct ClosedFormConstants {
    SurdElement beta1, beta2;
    SurdElement alpha1, alpha2;
    SurdElement gamma1, gamma2;
    SurdElement delta1, delta2;
};

/// Built once, immutable thereafter.
const ClosedFormConstants& constants();

/// Smallest rank the closed formula covers: B from 2, C from 1, D from 4;
/// nullopt for family A.
std::optional<int> min_closed_rank(Family f);

/// alpha1 * beta1^(r-2) + alpha2 * beta2^(r-2) for type B (and the gamma,
/// delta analogues for C and D), collapsed to an exact polynomial. The surd
/// components cancel identically; a NotPolynomial escape here signals an
/// internal inconsistency, never a user error.
QPolynomial value(const LieType& t);

}  // namespace closed_form
}  // namespace kostantq

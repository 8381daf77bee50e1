#include <doctest.h>

#include "kostantq/closed_form.hpp"
#include "kostantq/errors.hpp"
#include "kostantq/genfun.hpp"
#include "kostantq/recurrences.hpp"

using namespace kostantq;

TEST_SUITE("closed_form") {

TEST_CASE("constants in canonical form") {
    const auto& k = closed_form::constants();

    // beta1 = ((2 + 2q + q^2) + q s) / 2
    CHECK(k.beta1.rat() == RationalQ(QPolynomial{2, 2, 1}, QPolynomial(2)));
    CHECK(k.beta1.surd() == RationalQ(QPolynomial{0, 1}, QPolynomial(2)));
    CHECK(k.beta2 == k.beta1.conjugate());

    // gamma1 = (q(q^2+4) + q^2 s) / (2(q^2+4))
    CHECK(k.gamma1.rat() == RationalQ(QPolynomial{0, 1}, QPolynomial(2)));
    CHECK(k.gamma1.surd() == RationalQ(QPolynomial{0, 0, 1}, QPolynomial{8, 0, 2}));

    // the delta denominators are rationalized on construction
    CHECK(k.delta1.rat().den() == QPolynomial(2));
    CHECK(k.delta1.surd().den() == QPolynomial{8, 0, 2});
    CHECK(k.delta2 == k.delta1.conjugate());
}

TEST_CASE("anchor systems pin the constants") {
    const auto& k = closed_form::constants();
    // type B at ranks 2 and 3
    CHECK((k.alpha1 + k.alpha2).to_polynomial() == QPolynomial{0, 1, 1, 1});
    CHECK((k.alpha1 * k.beta1 + k.alpha2 * k.beta2).to_polynomial() ==
          QPolynomial{0, 1, 3, 4, 2, 1});
    // type C at ranks 1 and 2
    CHECK((k.gamma1 + k.gamma2).to_polynomial() == QPolynomial{0, 1});
    CHECK((k.gamma1 * k.beta1 + k.gamma2 * k.beta2).to_polynomial() ==
          QPolynomial{0, 1, 1, 1});
    // type D at ranks 4 and 5
    CHECK((k.delta1 + k.delta2).to_polynomial() == QPolynomial{0, 1, 4, 6, 3, 1});
    CHECK((k.delta1 * k.beta1 + k.delta2 * k.beta2).to_polynomial() ==
          QPolynomial{0, 1, 6, 15, 17, 11, 4, 1});
}

TEST_CASE("closed values at the fixtures") {
    CHECK(closed_form::value({Family::C, 1}) == QPolynomial{0, 1});
    CHECK(closed_form::value({Family::B, 4}) == QPolynomial{0, 1, 5, 11, 11, 8, 3, 1});
    CHECK(closed_form::value({Family::D, 5}) == QPolynomial{0, 1, 6, 15, 17, 11, 4, 1});
}

TEST_CASE("closed values equal the recurrences across ranks") {
    for (Family f : {Family::B, Family::C, Family::D}) {
        recurrences::RecurrenceTable table(f);
        const int lo = *closed_form::min_closed_rank(f);
        for (int r = lo; r <= 24; ++r) CHECK(closed_form::value({f, r}) == table.at(r));
    }
}

TEST_CASE("surd component vanishes before collapse") {
    const auto& k = closed_form::constants();
    for (unsigned e = 0; e <= 16; ++e) {
        const SurdElement b1 = k.beta1.pow(e);
        const SurdElement b2 = k.beta2.pow(e);
        CHECK((k.alpha1 * b1 + k.alpha2 * b2).surd().is_zero());
        CHECK((k.gamma1 * b1 + k.gamma2 * b2).surd().is_zero());
        CHECK((k.delta1 * b1 + k.delta2 * b2).surd().is_zero());
    }
}

TEST_CASE("q = 1 closed values match the integer sequences") {
    for (Family f : {Family::B, Family::C, Family::D}) {
        const auto ints = genfun::expand(genfun::specialize_q1(genfun::series_for(f)), 16);
        const int lo = *closed_form::min_closed_rank(f);
        for (int r = lo; r <= 16; ++r)
            CHECK(closed_form::value({f, r}).value_at_one() ==
                  ints[static_cast<std::size_t>(r - 1)]);
    }
}

TEST_CASE("rank and family guards") {
    CHECK_THROWS_AS(closed_form::value({Family::B, 1}), InvalidRank);
    CHECK_THROWS_AS(closed_form::value({Family::D, 3}), InvalidRank);
    CHECK_THROWS_AS(closed_form::value({Family::A, 3}), UnsupportedVariant);
    CHECK_FALSE(closed_form::min_closed_rank(Family::A).has_value());
    CHECK(closed_form::min_closed_rank(Family::B) == 2);
}

}  // TEST_SUITE

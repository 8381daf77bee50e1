#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kostantq/errors.hpp"
#include "kostantq/oracle.hpp"

using namespace kostantq;
using oracle::PartitionMultiset;

namespace {

const QPolynomial kB4{0, 1, 5, 11, 11, 8, 3, 1};  // q^7+3q^6+8q^5+11q^4+11q^3+5q^2+q

std::vector<int> part_count_histogram(const std::vector<PartitionMultiset>& partitions,
                                      std::size_t max_parts) {
    std::vector<int> histogram(max_parts, 0);
    for (const auto& p : partitions) {
        REQUIRE(p.size() >= 1);
        REQUIRE(p.size() <= max_parts);
        ++histogram[p.size() - 1];
    }
    return histogram;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("counts the known type B examples") {
    CHECK(oracle::count_highest_root({Family::B, 4}) == kB4);
    CHECK(oracle::count_highest_root({Family::B, 2}) == QPolynomial{0, 1, 1, 1});
    CHECK(oracle::count_highest_root({Family::B, 1}) == QPolynomial{0, 1});
}

TEST_CASE("zero target counts the empty partition") {
    const auto roots = positive_roots({Family::B, 3});
    CHECK(oracle::count_partitions(roots, TargetWeight{}) == QPolynomial(1));
    CHECK(oracle::count_partitions(roots, TargetWeight{{0, 0, 0}}) == QPolynomial(1));
}

TEST_CASE("unreachable targets count zero") {
    const auto roots = positive_roots({Family::A, 2});
    CHECK(oracle::count_partitions(roots, TargetWeight{{0, 0, 5}}).is_zero());
}

TEST_CASE("type A counts match the closed product form") {
    CHECK(oracle::count_highest_root({Family::A, 3}) == QPolynomial{0, 1, 2, 1});
    for (int r = 1; r <= 8; ++r) {
        const QPolynomial expected = QPolynomial::q() * QPolynomial{1, 1}.pow(
                                         static_cast<unsigned>(r - 1));
        CHECK(oracle::count_highest_root({Family::A, r}) == expected);
    }
}

TEST_CASE("restricted counts split the full count") {
    for (int r = 1; r <= 6; ++r) {
        const LieType t{Family::B, r};
        const QPolynomial full = oracle::count_highest_root(t);
        const QPolynomial no_hook = oracle::count_highest_root_with_hooked(t, 0);
        const QPolynomial one_hook = oracle::count_highest_root_with_hooked(t, 1);
        CHECK(no_hook + one_hook == full);
    }
    CHECK(oracle::count_highest_root_with_hooked({Family::B, 2}, 1) == QPolynomial{0, 1});
    CHECK_THROWS_AS(oracle::count_highest_root_with_hooked({Family::B, 2}, 2),
                    std::invalid_argument);
}

TEST_CASE("restricted counts agree with filtered enumeration") {
    const LieType t{Family::B, 4};
    const auto partitions =
        oracle::enumerate_partitions(positive_roots(t), highest_root(t));
    QPolynomial no_hook, one_hook;
    for (const auto& p : partitions) {
        const auto hooks = std::count_if(p.parts.begin(), p.parts.end(),
                                         [](const RootVector& part) { return part.hooked; });
        REQUIRE(hooks <= 1);  // at most one hooked part can ever fit
        QPolynomial term = QPolynomial::monomial(p.size());
        if (hooks == 0) no_hook += term;
        else one_hook += term;
    }
    CHECK(no_hook == oracle::count_highest_root_with_hooked(t, 0));
    CHECK(one_hook == oracle::count_highest_root_with_hooked(t, 1));
}

TEST_CASE("enumeration reproduces the type B rank 4 table") {
    const LieType t{Family::B, 4};
    const auto roots = positive_roots(t);
    const auto target = highest_root(t);
    const auto partitions = oracle::enumerate_partitions(roots, target, 100);

    REQUIRE(partitions.size() == 40);
    CHECK(part_count_histogram(partitions, 7) == std::vector<int>{1, 5, 11, 11, 8, 3, 1});

    // every multiset sums to the target and appears exactly once
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : partitions) {
        std::vector<int> sum(target.coords.size(), 0);
        std::vector<std::vector<int>> key;
        for (const auto& part : p.parts) {
            for (std::size_t i = 0; i < part.coords.size(); ++i) sum[i] += part.coords[i];
            key.push_back(part.coords);
        }
        CHECK(sum == target.coords);
        CHECK(std::is_sorted(p.parts.begin(), p.parts.end()));
        CHECK(seen.insert(key).second);
    }

    // ordering: by part count, then lexicographic
    CHECK(std::is_sorted(partitions.begin(), partitions.end(),
                         [](const PartitionMultiset& a, const PartitionMultiset& b) {
                             if (a.size() != b.size()) return a.size() < b.size();
                             return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                                                 b.parts.begin(), b.parts.end());
                         }));

    // the one-part row is the highest root itself
    CHECK(partitions.front().parts.size() == 1);
    CHECK(partitions.front().parts[0].coords == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("small enumerations") {
    const auto a1 =
        oracle::enumerate_partitions(positive_roots({Family::A, 1}), highest_root({Family::A, 1}));
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].parts[0].coords == std::vector<int>{1});

    const auto c2 =
        oracle::enumerate_partitions(positive_roots({Family::C, 2}), highest_root({Family::C, 2}), 100);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0].size() == 1);
    CHECK(c2[1].size() == 2);
    CHECK(c2[2].size() == 3);
}

TEST_CASE("count polynomial equals the enumeration size profile") {
    std::vector<LieType> types;
    for (int r = 1; r <= 5; ++r) types.push_back({Family::B, r});
    for (int r = 1; r <= 5; ++r) types.push_back({Family::C, r});
    for (int r = 4; r <= 5; ++r) types.push_back({Family::D, r});
    for (int r = 1; r <= 6; ++r) types.push_back({Family::A, r});
    for (const auto& t : types) {
        const auto roots = positive_roots(t);
        const auto target = highest_root(t);
        QPolynomial from_enumeration;
        for (const auto& p : oracle::enumerate_partitions(roots, target))
            from_enumeration += QPolynomial::monomial(p.size());
        CHECK(from_enumeration == oracle::count_partitions(roots, target));
    }
}

TEST_CASE("limit guard reports the exact count") {
    const LieType t{Family::B, 8};
    try {
        oracle::enumerate_partitions(positive_roots(t), highest_root(t), 10);
        FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
        CHECK(e.count() == 6875);
    }
}

TEST_CASE("limit boundary is inclusive") {
    const LieType t{Family::B, 4};
    CHECK(oracle::enumerate_partitions(positive_roots(t), highest_root(t), 40).size() == 40);
    CHECK_THROWS_AS(oracle::enumerate_partitions(positive_roots(t), highest_root(t), 39),
                    LimitExceeded);
}

TEST_CASE("root ordering independence") {
    const LieType t{Family::C, 5};
    auto roots = positive_roots(t);
    const auto target = highest_root(t);
    const QPolynomial reference = oracle::count_partitions(roots, target);
    std::mt19937_64 rng(99u);
    for (int iter = 0; iter < 5; ++iter) {
        std::shuffle(roots.begin(), roots.end(), rng);
        CHECK(oracle::count_partitions(roots, target) == reference);
    }
}

TEST_CASE("structural coefficients of highest-root counts") {
    for (const LieType t : {LieType{Family::B, 6}, {Family::C, 6}, {Family::D, 6}, {Family::A, 6}}) {
        const QPolynomial p = oracle::count_highest_root(t);
        const int height = highest_root(t).coord_sum();
        CHECK(*p.degree() == static_cast<std::size_t>(height));
        CHECK(p.leading_coeff() == 1);
        CHECK(p.coeff(0) == 0);
        CHECK(p.coeff(1) == 1);  // the target itself is a root
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(
        oracle::count_partitions({RootVector{{-1, 2}, false}}, TargetWeight{{1, 2}}),
        std::invalid_argument);
    CHECK_THROWS_AS(oracle::count_partitions({}, TargetWeight{{-1}}), std::invalid_argument);
}

}  // TEST_SUITE

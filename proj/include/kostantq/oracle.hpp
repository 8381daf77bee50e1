#pragma once

#include <cstdint>
#include <vector>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/root_systems.hpp"

namespace kostantq {
namespace oracle {

/// One way of writing a target weight as a multiset of positive roots.
/// Parts are kept in canonical order (coordinate sum, then lexicographic).
struct PartitionMultiset {
    std::vector<RootVector> parts;

    std::size_t size() const noexcept { return parts.size(); }
    friend bool operator==(const PartitionMultiset& a, const PartitionMultiset& b) = default;
};

/// Exact q-weighted count of multisets of the given roots summing to target:
/// the coefficient of q^k is the number of such multisets with exactly k
/// parts, counted with multiplicity. The zero target counts the empty
/// multiset (returns 1); unreachable targets return 0.
///
/// This is the raw counting surface. It accepts any nonnegative target, which
/// is experimental beyond the highest-root weights the rest of the library is
/// validated against.
QPolynomial count_partitions(const std::vector<RootVector>& roots, const TargetWeight& target);

/// Same count restricted to multisets using exactly `hooked_parts` parts
/// tagged hooked (with multiplicity). hooked_parts must be 0 or 1.
QPolynomial count_partitions_with_hooked(const std::vector<RootVector>& roots,
                                         const TargetWeight& target, int hooked_parts);

/// Every multiset exactly once, sorted by part count then lexicographically
/// by canonical parts. Throws LimitExceeded (carrying the exact count) when
/// more than `limit` partitions exist.
std::vector<PartitionMultiset> enumerate_partitions(const std::vector<RootVector>& roots,
                                                    const TargetWeight& target,
                                                    std::uint64_t limit = 1'000'000);

/// Brute-force count over positive_roots(t) at highest_root(t).
QPolynomial count_highest_root(const LieType& t);

/// Split count at highest_root(t) by number of hooked parts (0 or 1).
QPolynomial count_highest_root_with_hooked(const LieType& t, int hooked_parts);

}  // namespace oracle
}  // namespace kostantq

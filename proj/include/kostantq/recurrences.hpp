#pragma once

#include <vector>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/root_systems.hpp"

namespace kostantq {
namespace recurrences {

/// Highest-root count polynomial for type A: q(1+q)^(rank-1).
QPolynomial type_a_count(int rank);

/// Append-only table of highest-root count polynomials for one family,
/// computed by the family's recursion. Type B additionally carries the split
/// into parts-with-a-hook and hook-free counts, whose running prefix sums
/// drive both its own recursion and the type D reduction (a type D value at
/// rank r is assembled from the type B split at rank r-2).
///
/// Populated entries never change; callers wanting isolation use one table
/// per call (the free functions below do exactly that).
class RecurrenceTable {
public:
    explicit RecurrenceTable(Family family);

    Family family() const noexcept { return family_; }

    const QPolynomial& at(int rank);

    /// Type B split counts; throws std::invalid_argument for other families.
    const QPolynomial& nonhooked_at(int rank);
    const QPolynomial& hooked_at(int rank);

private:
    void grow_b(int rank);
    void grow_c(int rank);
    void grow_a(int rank);
    void ensure(int rank);

    Family family_;
    // Indexed directly by rank; index 0 (and 1..3 for type D) unused.
    std::vector<QPolynomial> values_;
    std::vector<QPolynomial> nh_values_;
    std::vector<QPolynomial> h_values_;
    std::vector<QPolynomial> nh_prefix_;   // sum of nh_values_[1..k]
    std::vector<QPolynomial> nh_prefix2_;  // sum of nh_prefix_[1..k]
    std::vector<QPolynomial> c_prefix_;
};

/// Count polynomial via the family recursion, fresh table per call.
QPolynomial count(const LieType& t);

/// Type B counts split by hooked-part usage, fresh table per call.
QPolynomial nonhooked_count_b(int rank);
QPolynomial hooked_count_b(int rank);

}  // namespace recurrences
}  // namespace kostantq

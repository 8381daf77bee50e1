#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kostantq {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family family_from_letter(char c);  // throws std::invalid_argument

/// Minimum legal rank: A, B, C admit rank 1 (B1 and C1 degenerate to the
/// one-root system used as a recursion base), D needs rank 4.
int min_rank(Family f);

struct LieType {
    Family family;
    int rank;

    /// Throws InvalidRank with an actionable message when rank is below the
    /// family minimum.
    void validate() const;
    std::string name() const;  // e.g. "B4"
};

/// A positive root in the fixed coordinate basis: a nonzero sequence of
/// nonnegative integers with trailing zeros trimmed. Roots whose expansion
/// contains a coefficient 2 (plus, in type D, the two-antenna tail) are
/// tagged hooked; at most one hooked part can appear in any partition of the
/// highest root, which the split counts rely on.
struct RootVector {
    std::vector<int> coords;
    bool hooked = false;

    int coord_sum() const;
    std::string to_string() const;  // "e1+2e2+2e3" style

    /// Canonical order: coordinate sum, then lexicographic by support
    /// position (e1 before e2). Distinct roots never tie.
    friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b);
    friend bool operator==(const RootVector& a, const RootVector& b) = default;
};

struct TargetWeight {
    std::vector<int> coords;

    int coord_sum() const;
    std::string to_string() const;
    friend bool operator==(const TargetWeight& a, const TargetWeight& b) = default;
};

/// All positive roots of the given type in coordinate form, canonically
/// sorted, no duplicates. Type C's basis reversal is already applied, so the
/// hook sits at the front of the vector (1, 2, ..., 2, 1, ..., 1); callers
/// never see simple-root indices.
std::vector<RootVector> positive_roots(const LieType& t);

/// Coordinate image of the highest root: (1,2,...,2) for B and C,
/// (1,2,...,2,1,1) for D, (1,...,1) for A.
TargetWeight highest_root(const LieType& t);

/// True iff the hooked roots have a unique maximal coordinate sum attained by
/// the highest root itself. Families B, C, D only; false when no hooked root
/// exists (ranks 1 of B and C).
bool sum_check(const LieType& t);

}  // namespace kostantq

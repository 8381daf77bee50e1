#include "kostantq/root_systems.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "kostantq/errors.hpp"

namespace kostantq {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

Family family_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown family '") + c + "' (expected A, B, C or D)");
}

int min_rank(Family f) { return f == Family::D ? 4 : 1; }

void LieType::validate() const {
    if (rank < min_rank(family)) {
        throw InvalidRank("type " + std::string(1, family_letter(family)) + " requires rank >= " +
                          std::to_string(min_rank(family)));
    }
}

std::string LieType::name() const { return family_letter(family) + std::to_string(rank); }

int RootVector::coord_sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }
int TargetWeight::coord_sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
    if (auto c = a.coord_sum() <=> b.coord_sum(); c != 0) return c;
    // Reversed lexicographic comparison puts low-index supports first, the
    // order the partition tables are written in (e1 before e2).
    return b.coords <=> a.coords;
}

namespace {

std::string render_coords(const std::vector<int>& coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (coords[i] != 1) out += std::to_string(coords[i]);
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

void trim(std::vector<int>& coords) {
    while (!coords.empty() && coords.back() == 0) coords.pop_back();
}

RootVector make_root(std::vector<int> coords, bool hooked) {
    trim(coords);
    assert(!coords.empty());
    return RootVector{std::move(coords), hooked};
}

// Run of 1s over [i, j], zero-based inclusive.
RootVector interval_root(int i, int j) {
    std::vector<int> c(static_cast<std::size_t>(j) + 1, 0);
    for (int k = i; k <= j; ++k) c[static_cast<std::size_t>(k)] = 1;
    return make_root(std::move(c), false);
}

}  // namespace

std::string RootVector::to_string() const { return render_coords(coords); }
std::string TargetWeight::to_string() const { return render_coords(coords); }

std::vector<RootVector> positive_roots(const LieType& t) {
    t.validate();
    const int r = t.rank;
    std::vector<RootVector> roots;

    switch (t.family) {
        case Family::A:
            // All interval sums e_i + ... + e_j, 1 <= i <= j <= r.
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) roots.push_back(interval_root(i, j));
            break;

        case Family::B:
            // Nonhooked: every interval. Hooked: a run of 1s from i to j-1
            // followed by 2s out to the last coordinate, i < j.
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) roots.push_back(interval_root(i, j));
            for (int i = 0; i < r; ++i) {
                for (int j = i + 1; j < r; ++j) {
                    std::vector<int> c(static_cast<std::size_t>(r), 0);
                    for (int k = i; k < j; ++k) c[static_cast<std::size_t>(k)] = 1;
                    for (int k = j; k < r; ++k) c[static_cast<std::size_t>(k)] = 2;
                    roots.push_back(make_root(std::move(c), true));
                }
            }
            break;

        case Family::C:
            // Same nonhooked intervals as type B. Hooked: the basis reversal
            // puts the hook at the front, 1 then 2s through position i, then
            // 1s through position j; the tail of 1s may be empty (i = j),
            // which covers the long roots, the highest root among them.
            for (int i = 0; i < r; ++i)
                for (int j = i; j < r; ++j) roots.push_back(interval_root(i, j));
            for (int i = 1; i < r; ++i) {
                for (int j = i; j < r; ++j) {
                    std::vector<int> c(static_cast<std::size_t>(r), 0);
                    c[0] = 1;
                    for (int k = 1; k <= i; ++k) c[static_cast<std::size_t>(k)] = 2;
                    for (int k = i + 1; k <= j; ++k) c[static_cast<std::size_t>(k)] = 1;
                    roots.push_back(make_root(std::move(c), true));
                }
            }
            break;

        case Family::D: {
            // The last two coordinates play the role of the fork: e_{r-1}+e_r
            // is NOT a root (the two antenna nodes are not adjacent), every
            // other interval is. Additional nonhooked family: a run ending at
            // r-2 plus e_r, skipping e_{r-1}.
            for (int i = 0; i < r; ++i) {
                for (int j = i; j < r; ++j) {
                    if (i == r - 2 && j == r - 1) continue;
                    roots.push_back(interval_root(i, j));
                }
            }
            for (int i = 0; i <= r - 3; ++i) {
                std::vector<int> c(static_cast<std::size_t>(r), 0);
                for (int k = i; k <= r - 3; ++k) c[static_cast<std::size_t>(k)] = 1;
                c[static_cast<std::size_t>(r - 1)] = 1;
                roots.push_back(make_root(std::move(c), false));
            }
            // Hooked: 1s from i to j-1, 2s from j to r-2, then both antennas.
            for (int i = 0; i <= r - 3; ++i) {
                for (int j = i + 1; j <= r - 3; ++j) {
                    std::vector<int> c(static_cast<std::size_t>(r), 0);
                    for (int k = i; k < j; ++k) c[static_cast<std::size_t>(k)] = 1;
                    for (int k = j; k <= r - 3; ++k) c[static_cast<std::size_t>(k)] = 2;
                    c[static_cast<std::size_t>(r - 2)] = 1;
                    c[static_cast<std::size_t>(r - 1)] = 1;
                    roots.push_back(make_root(std::move(c), true));
                }
            }
            break;
        }
    }

    std::sort(roots.begin(), roots.end());
    assert(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
    return roots;
}

TargetWeight highest_root(const LieType& t) {
    t.validate();
    const int r = t.rank;
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    switch (t.family) {
        case Family::A:
            std::fill(c.begin(), c.end(), 1);
            break;
        case Family::B:
        case Family::C:
            c[0] = 1;
            for (int k = 1; k < r; ++k) c[static_cast<std::size_t>(k)] = 2;
            break;
        case Family::D:
            c[0] = 1;
            for (int k = 1; k <= r - 3; ++k) c[static_cast<std::size_t>(k)] = 2;
            c[static_cast<std::size_t>(r - 2)] = 1;
            c[static_cast<std::size_t>(r - 1)] = 1;
            break;
    }
    return TargetWeight{std::move(c)};
}

bool sum_check(const LieType& t) {
    t.validate();
    if (t.family == Family::A) throw std::invalid_argument("sum_check: type A has no hooked roots");
    const auto roots = positive_roots(t);
    const auto target = highest_root(t);

    const RootVector* best = nullptr;
    bool unique = true;
    for (const auto& root : roots) {
        if (!root.hooked) continue;
        if (best == nullptr || root.coord_sum() > best->coord_sum()) {
            best = &root;
            unique = true;
        } else if (root.coord_sum() == best->coord_sum()) {
            unique = false;
        }
    }
    return best != nullptr && unique && best->coords == target.coords;
}

}  // namespace kostantq

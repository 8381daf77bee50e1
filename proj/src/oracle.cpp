#include "kostantq/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "kostantq/errors.hpp"

namespace kostantq {
namespace oracle {

namespace {

constexpr std::uint64_t kMaxStates = std::uint64_t(1) << 28;

// Mixed-radix address space over {w : 0 <= w <= target componentwise};
// coordinate i contributes digits 0..target[i] with its own stride.
struct StateBox {
    std::vector<int> target;
    std::vector<std::uint64_t> stride;
    std::uint64_t states = 1;
};

StateBox make_box(const TargetWeight& target) {
    StateBox box;
    box.target = target.coords;
    box.stride.resize(box.target.size());
    for (std::size_t i = 0; i < box.target.size(); ++i) {
        if (box.target[i] < 0) throw std::invalid_argument("oracle: negative target coordinate");
        box.stride[i] = box.states;
        box.states *= static_cast<std::uint64_t>(box.target[i]) + 1;
        if (box.states > kMaxStates) throw std::invalid_argument("oracle: target state space too large");
    }
    return box;
}

// Root usable iff it is nonzero and fits under the target componentwise.
bool fits(const RootVector& root, const std::vector<int>& target) {
    if (root.coords.size() > target.size()) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < root.coords.size(); ++i) {
        if (root.coords[i] < 0) throw std::invalid_argument("oracle: negative root coordinate");
        if (root.coords[i] > target[i]) return false;
        nonzero |= root.coords[i] > 0;
    }
    return nonzero;
}

std::uint64_t offset_of(const RootVector& root, const StateBox& box) {
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < root.coords.size(); ++i)
        off += static_cast<std::uint64_t>(root.coords[i]) * box.stride[i];
    return off;
}

using CoeffVec = std::vector<BigInt>;

// dst += q * src
void add_shifted(CoeffVec& dst, const CoeffVec& src) {
    if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, BigInt(0));
    for (std::size_t k = 0; k < src.size(); ++k) dst[k + 1] += src[k];
}

// Fold one root into the table: dp[w] += q * dp[w - root] for every w >= root,
// visited in increasing linear index so unlimited multiplicity accumulates.
void fold_root(std::vector<CoeffVec>& dp, const RootVector& root, const StateBox& box) {
    const std::size_t dim = box.target.size();
    std::vector<int> low(dim, 0);
    std::copy(root.coords.begin(), root.coords.end(), low.begin());
    std::vector<int> digit = low;
    std::uint64_t idx = offset_of(root, box);
    const std::uint64_t off = idx;
    while (true) {
        const CoeffVec& src = dp[idx - off];
        if (!src.empty()) add_shifted(dp[idx], src);
        std::size_t pos = 0;
        while (pos < dim && digit[pos] == box.target[pos]) {
            idx -= static_cast<std::uint64_t>(digit[pos] - low[pos]) * box.stride[pos];
            digit[pos] = low[pos];
            ++pos;
        }
        if (pos == dim) break;
        ++digit[pos];
        idx += box.stride[pos];
    }
}

std::vector<CoeffVec> run_dp(const std::vector<RootVector>& roots, const StateBox& box,
                             bool include_hooked) {
    std::vector<CoeffVec> dp(box.states);
    dp[0] = {BigInt(1)};
    for (const auto& root : roots) {
        if (root.hooked && !include_hooked) continue;
        if (!fits(root, box.target)) continue;
        fold_root(dp, root, box);
    }
    return dp;
}

QPolynomial poly_at(std::vector<CoeffVec>& dp, std::uint64_t idx) {
    return QPolynomial(std::move(dp[idx]));
}

}  // namespace

QPolynomial count_partitions(const std::vector<RootVector>& roots, const TargetWeight& target) {
    const StateBox box = make_box(target);
    auto dp = run_dp(roots, box, /*include_hooked=*/true);
    return poly_at(dp, box.states - 1);
}

QPolynomial count_partitions_with_hooked(const std::vector<RootVector>& roots,
                                         const TargetWeight& target, int hooked_parts) {
    if (hooked_parts != 0 && hooked_parts != 1)
        throw std::invalid_argument("oracle: hooked_parts must be 0 or 1");
    const StateBox box = make_box(target);
    auto dp = run_dp(roots, box, /*include_hooked=*/false);
    if (hooked_parts == 0) return poly_at(dp, box.states - 1);

    // Exactly one hooked part: pick it, fill the rest without hooks.
    QPolynomial total;
    for (const auto& root : roots) {
        if (!root.hooked || !fits(root, box.target)) continue;
        const auto& rest = dp[box.states - 1 - offset_of(root, box)];
        if (!rest.empty()) total += QPolynomial(rest).shifted(1);
    }
    return total;
}

namespace {

struct Enumerator {
    const std::vector<RootVector>* roots = nullptr;
    std::vector<std::uint64_t> suffix_support;  // coordinate mask usable from index i on
    std::vector<PartitionMultiset> out;

    void run(std::vector<int> remaining) {
        std::vector<RootVector> parts;
        dfs(0, remaining, parts);
    }

    void dfs(std::size_t i, std::vector<int>& remaining, std::vector<RootVector>& parts) {
        std::uint64_t need = 0;
        for (std::size_t k = 0; k < remaining.size(); ++k)
            if (remaining[k] != 0) need |= std::uint64_t(1) << (k & 63u);
        if (need == 0) {
            out.push_back(PartitionMultiset{parts});
            return;
        }
        if (i == roots->size()) return;
        if (remaining.size() <= 64 && (need & ~suffix_support[i]) != 0) return;

        const RootVector& root = (*roots)[i];
        int max_copies = INT_MAX;
        for (std::size_t k = 0; k < root.coords.size(); ++k) {
            if (root.coords[k] == 0) continue;
            max_copies = std::min(max_copies, remaining[k] / root.coords[k]);
        }
        for (int m = 0; m <= max_copies; ++m) {
            if (m > 0) {
                for (std::size_t k = 0; k < root.coords.size(); ++k) remaining[k] -= root.coords[k];
                parts.push_back(root);
            }
            dfs(i + 1, remaining, parts);
        }
        for (int m = 0; m < max_copies; ++m) parts.pop_back();
        for (std::size_t k = 0; k < root.coords.size(); ++k)
            remaining[k] += max_copies * root.coords[k];
    }
};

}  // namespace

std::vector<PartitionMultiset> enumerate_partitions(const std::vector<RootVector>& roots,
                                                    const TargetWeight& target,
                                                    std::uint64_t limit) {
    const BigInt count = count_partitions(roots, target).value_at_one();
    if (count > limit) throw LimitExceeded(count, limit);

    std::vector<RootVector> usable;
    for (const auto& root : roots)
        if (fits(root, target.coords)) usable.push_back(root);
    std::sort(usable.begin(), usable.end());

    Enumerator en;
    en.roots = &usable;
    en.suffix_support.assign(usable.size() + 1, 0);
    if (target.coords.size() <= 64) {
        for (std::size_t i = usable.size(); i-- > 0;) {
            std::uint64_t mask = en.suffix_support[i + 1];
            for (std::size_t k = 0; k < usable[i].coords.size(); ++k)
                if (usable[i].coords[k] != 0) mask |= std::uint64_t(1) << k;
            en.suffix_support[i] = mask;
        }
    }
    en.run(target.coords);

    std::sort(en.out.begin(), en.out.end(), [](const PartitionMultiset& a, const PartitionMultiset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                            b.parts.end());
    });
    return en.out;
}

QPolynomial count_highest_root(const LieType& t) {
    return count_partitions(positive_roots(t), highest_root(t));
}

QPolynomial count_highest_root_with_hooked(const LieType& t, int hooked_parts) {
    return count_partitions_with_hooked(positive_roots(t), highest_root(t), hooked_parts);
}

}  // namespace oracle
}  // namespace kostantq

#pragma once

#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace geomcomb {

inline constexpr unsigned kDefaultEnumerationCap = 7;

/// Configuration of the brute-force count for the alpha = 0 model:
/// n labeled elements, lambda >= 1 block-bearing sections, one special
/// section. Elements in the special section take gamma colors each, the
/// other elements beta colors, every block one of x colors. Colors enter as
/// multiplicative weights; the structures themselves are enumerated.
struct BpaConfig {
    unsigned n = 0;
    unsigned lambda = 1;
    unsigned beta = 1;
    unsigned gamma = 0;
    unsigned x = 1;
    unsigned cap = kDefaultEnumerationCap;
};

/// One explicit barred arrangement: the special section's element set, the
/// ordered blocks covering the rest, and the composition that deals
/// consecutive blocks out to the lambda sections.
struct BpaStructure {
    std::vector<int> special;
    std::vector<std::vector<int>> blocks;
    std::vector<unsigned> section_sizes;  // lambda entries summing to blocks.size()
    BigInt weight;                        // gamma^|special| * beta^rest * x^blocks
};

namespace detail {

template <typename Fn>
void osp_rec(const std::vector<int>& elems, unsigned remaining,
             std::vector<std::vector<int>>& blocks, Fn&& visit) {
    if (remaining == 0) {
        visit(blocks);
        return;
    }
    // every nonempty submask of `remaining` can be the next block
    for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
        std::vector<int> block;
        for (unsigned i = 0; i < elems.size(); ++i)
            if (sub >> i & 1u) block.push_back(elems[i]);
        blocks.push_back(std::move(block));
        osp_rec(elems, remaining & ~sub, blocks, visit);
        blocks.pop_back();
    }
}

}  // namespace detail

/// Visits every ordered set partition (sequence of disjoint nonempty blocks
/// covering `elems`) exactly once, in a fixed deterministic order. The number
/// of visits for |elems| = n is the n-th Fubini number.
template <typename Fn>
void for_each_ordered_set_partition(const std::vector<int>& elems, Fn&& visit) {
    if (elems.size() > 31)
        throw CapExceededError(static_cast<unsigned>(elems.size()), 31);
    std::vector<std::vector<int>> blocks;
    const unsigned full = (1u << elems.size()) - 1u;
    detail::osp_rec(elems, full, blocks, visit);
}

inline std::vector<std::vector<std::vector<int>>> enumerate_ordered_set_partitions(
    const std::vector<int>& elems, unsigned cap = kDefaultEnumerationCap) {
    if (elems.size() > cap) throw CapExceededError(static_cast<unsigned>(elems.size()), cap);
    std::vector<std::vector<std::vector<int>>> out;
    for_each_ordered_set_partition(elems, [&](const auto& blocks) { out.push_back(blocks); });
    return out;
}

namespace detail {

inline BigInt ipow(unsigned base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

template <typename Fn>
void for_each_special_and_osp(const BpaConfig& cfg, Fn&& visit) {
    if (cfg.lambda == 0) throw LambdaZeroError();
    if (cfg.n > cfg.cap) throw CapExceededError(cfg.n, cfg.cap);
    const unsigned full = (1u << cfg.n) - 1u;
    for (unsigned special = 0; special <= full; ++special) {
        const unsigned s = static_cast<unsigned>(__builtin_popcount(special));
        if (cfg.gamma == 0 && s > 0) continue;  // zero weight
        std::vector<int> specials, rest;
        for (unsigned i = 0; i < cfg.n; ++i)
            ((special >> i & 1u) ? specials : rest).push_back(static_cast<int>(i + 1));
        const BigInt color_weight = ipow(cfg.gamma, s) * ipow(cfg.beta, cfg.n - s);
        for_each_ordered_set_partition(rest, [&](const std::vector<std::vector<int>>& blocks) {
            const unsigned k = static_cast<unsigned>(blocks.size());
            if (cfg.x == 0 && k > 0) return;  // zero weight
            visit(specials, blocks, color_weight * ipow(cfg.x, k));
        });
    }
}

template <typename Fn>
void for_each_composition(unsigned total, unsigned parts, std::vector<unsigned>& acc, Fn&& visit) {
    if (parts == 1) {
        acc.push_back(total);
        visit(acc);
        acc.pop_back();
        return;
    }
    for (unsigned first = 0; first <= total; ++first) {
        acc.push_back(first);
        for_each_composition(total - first, parts - 1, acc, visit);
        acc.pop_back();
    }
}

}  // namespace detail

/// Weighted count over (special subset, ordered partition of the rest into k
/// blocks, C(k+lambda-1, lambda-1) ways to deal the blocks to the sections):
///   sum gamma^|special| * beta^(n-|special|) * x^k * C(k+lambda-1, lambda-1).
/// Must equal t_poly(n, lambda, (0, beta, gamma)) evaluated at x.
inline BigInt count_bpa(const BpaConfig& cfg) {
    BigInt total = 0;
    detail::for_each_special_and_osp(
        cfg, [&](const std::vector<int>&, const std::vector<std::vector<int>>& blocks,
                 BigInt weight) {
            const unsigned k = static_cast<unsigned>(blocks.size());
            total += weight * binom(k + cfg.lambda - 1, cfg.lambda - 1);
        });
    return total;
}

/// Materializes the structures (colors folded into per-structure weights;
/// zero-weight structures are skipped). The weighted sum of the listing
/// equals count_bpa.
inline std::vector<BpaStructure> list_bpa(const BpaConfig& cfg) {
    std::vector<BpaStructure> out;
    detail::for_each_special_and_osp(
        cfg, [&](const std::vector<int>& specials, const std::vector<std::vector<int>>& blocks,
                 BigInt weight) {
            const unsigned k = static_cast<unsigned>(blocks.size());
            std::vector<unsigned> acc;
            detail::for_each_composition(k, cfg.lambda, acc, [&](const std::vector<unsigned>& comp) {
                out.push_back(BpaStructure{specials, blocks, comp, weight});
            });
        });
    return out;
}

}  // namespace geomcomb

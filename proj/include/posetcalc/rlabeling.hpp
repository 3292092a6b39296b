#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "posetcalc/abindex.hpp"
#include "posetcalc/error.hpp"
#include "posetcalc/ncpoly.hpp"
#include "posetcalc/poset.hpp"

namespace posetcalc {

// Integer label per cover relation.
struct EdgeLabeling {
    std::map<std::pair<int, int>, long long> labels;

    long long at(int u, int v) const {
        auto it = labels.find({u, v});
        if (it == labels.end()) raise(ErrorKind::MissingLabel, "cover has no label");
        return it->second;
    }
};

struct RLabelingCheck {
    bool ok = true;
    // when !ok: an interval with zero or >= 2 weakly rising maximal chains
    int witness_bottom = -1;
    int witness_top = -1;
    long long rising_chains = 0;
};

namespace detail {

inline long long count_rising_chains(const Poset& p, const EdgeLabeling& labeling, int u, int w) {
    if (u == w) return 1;
    long long count = 0;
    auto walk = [&](auto&& self, int v, long long last) -> void {
        if (v == w) {
            ++count;
            return;
        }
        for (int c : p.upper_covers(v)) {
            if (!p.leq(c, w)) continue;
            long long lab = labeling.at(v, c);
            if (lab >= last) self(self, c, lab);
        }
    };
    for (int c : p.upper_covers(u)) {
        if (!p.leq(c, w)) continue;
        walk(walk, c, labeling.at(u, c));
    }
    return count;
}

inline void require_total_labeling(const Poset& p, const EdgeLabeling& labeling) {
    for (const auto& [u, v] : p.covers()) labeling.at(u, v);
}

} // namespace detail

// An R-labeling assigns labels to covers so that every interval has exactly
// one weakly increasing maximal chain. Verification is by exhaustive count;
// the first offending interval is reported as a witness.
inline RLabelingCheck check_r_labeling(const Poset& p, const EdgeLabeling& labeling) {
    detail::require_total_labeling(p, labeling);
    for (int u = 0; u < p.size(); ++u) {
        for (int w = 0; w < p.size(); ++w) {
            if (!p.less(u, w)) continue;
            long long rising = detail::count_rising_chains(p, labeling, u, w);
            if (rising != 1) return {false, u, w, rising};
        }
    }
    return {};
}

// Descent word of a maximal chain under a sign set E ⊆ {1..n}: the label
// sequence starts at 0, entry i is the i-th cover label negated when i is
// in E, and position i of the word reads b exactly on strict descents.
inline AbWord descent_word(const Poset& p, const EdgeLabeling& labeling, const Chain& m,
                           std::uint64_t e_subset) {
    const int n = p.top_rank();
    if (static_cast<int>(m.elements.size()) != n + 1 || m.elements.front() != p.bottom() ||
        m.elements.back() != p.top())
        raise(ErrorKind::NotMaximalChain, "chain must run from bottom to top through every rank");
    for (std::size_t i = 0; i + 1 < m.elements.size(); ++i) {
        const auto& ups = p.upper_covers(m.elements[i]);
        if (std::find(ups.begin(), ups.end(), m.elements[i + 1]) == ups.end())
            raise(ErrorKind::NotMaximalChain, "consecutive chain elements must be covers");
    }
    detail::check_subset_range(e_subset, 1, n, "sign subset not within {1..n}");

    std::vector<long long> seq(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        long long lab = labeling.at(m.elements[static_cast<std::size_t>(i) - 1],
                                    m.elements[static_cast<std::size_t>(i)]);
        seq[static_cast<std::size_t>(i)] = ((e_subset >> i) & 1) ? -lab : lab;
    }
    std::uint64_t b_mask = 0;
    for (int i = 0; i < n; ++i)
        if (seq[static_cast<std::size_t>(i)] > seq[static_cast<std::size_t>(i) + 1])
            b_mask |= 1ULL << i;
    return AbWord::from_b_mask(b_mask, n);
}

// Extended ab-index from a nonnegative R-labeling: sum of y^|E| times the
// descent word over all maximal chains and all sign sets. The sign rule is
// applied literally; a tie in a label sequence (two equal consecutive
// labels, or a zero label tying with the leading 0) stays a weak rise under
// negation, so agreement with the extended ab-index is only guaranteed for
// labelings without such ties.
inline NcPoly extended_ab_index_from_labeling(const Poset& p, const EdgeLabeling& labeling) {
    detail::require_total_labeling(p, labeling);
    for (const auto& [cover, label] : labeling.labels)
        if (label < 0) raise(ErrorKind::NegativeLabel, "labels must be nonnegative");
    RLabelingCheck check = check_r_labeling(p, labeling);
    if (!check.ok)
        raise(ErrorKind::NotAnRLabeling,
              "interval [" + p.name(check.witness_bottom) + ", " + p.name(check.witness_top) +
                  "] has " + std::to_string(check.rising_chains) + " weakly rising maximal chains");

    const int n = p.top_rank();
    NcPoly total(n);
    for (const Chain& m : maximal_chains(p)) {
        for (std::uint64_t e_bits = 0; e_bits < (1ULL << n); ++e_bits) {
            std::uint64_t e = e_bits << 1;
            total += NcPoly::term(descent_word(p, labeling, m, e),
                                  YPoly::monomial(1, std::popcount(e)));
        }
    }
    return total;
}

} // namespace posetcalc

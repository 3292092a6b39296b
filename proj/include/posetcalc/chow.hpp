#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "posetcalc/abindex.hpp"
#include "posetcalc/error.hpp"
#include "posetcalc/ncpoly.hpp"
#include "posetcalc/poly.hpp"
#include "posetcalc/poset.hpp"

namespace posetcalc {

// Chow polynomial: the extended ab-index evaluated at (y, a, b) = (-x, 1, x)
// and divided exactly by (1-x)^n. The augmented variant starts from the full
// index, the plain one from its tilde counterpart.
inline XPoly chow_polynomial(const Poset& p, bool augmented) {
    const int n = p.top_rank();
    if (!augmented) detail::require_nontrivial(p, "plain Chow polynomial needs rank >= 1");
    NcPoly index = augmented ? extended_ab_index(p) : extended_ab_index_tilde(p);
    XPoly value = evaluate(index, XPoly(1), XPoly::monomial(1, 1), XPoly::monomial(-1, 1));
    return exact_div(value, pow(XPoly{1, -1}, n));
}

// Subsets of {lo..hi} without two consecutive members, ascending as
// bitmasks. An empty window yields exactly the empty subset.
inline std::vector<std::uint64_t> isolated_subsets(int lo, int hi) {
    std::vector<std::uint64_t> out;
    if (hi < lo) {
        out.push_back(0);
        return out;
    }
    const int width = hi - lo + 1;
    for (std::uint64_t m = 0; m < (1ULL << width); ++m)
        if ((m & (m >> 1)) == 0) out.push_back(m << lo);
    return out;
}

struct GammaTerm {
    std::uint64_t subset;
    long long coefficient;
};

// Gamma expansion of the (augmented) Chow polynomial: flag h-vector values
// over isolated subsets, in the basis x^k (1+x)^(d-2k). Coefficients may be
// negative for posets without a nonnegative flag h-vector; the expansion is
// reported either way.
struct GammaExpansion {
    int n = 0;
    bool augmented = false;
    std::vector<GammaTerm> terms;

    bool has_negative_coefficient() const {
        for (const auto& t : terms)
            if (t.coefficient < 0) return true;
        return false;
    }

    XPoly expanded() const {
        const int d = augmented ? n : n - 1;
        XPoly total;
        for (const auto& t : terms) {
            int k = std::popcount(t.subset);
            total += XPoly::monomial(t.coefficient, k) * pow(XPoly{1, 1}, d - 2 * k);
        }
        return total;
    }
};

inline GammaExpansion gamma_expansion(const Poset& p, bool augmented) {
    const int n = p.top_rank();
    if (!augmented) detail::require_nontrivial(p, "plain gamma expansion needs rank >= 1");
    FlagVector beta = flag_h_vector(p);
    GammaExpansion g;
    g.n = n;
    g.augmented = augmented;
    for (std::uint64_t t : isolated_subsets(augmented ? 1 : 2, n - 1))
        g.terms.push_back({t, beta.at(t)});
    return g;
}

// Both canonical decomposition identities: the (augmented) Chow polynomial
// rebuilt from truncated geometric series and the plain Chow polynomials of
// the upper intervals of interior elements.
struct CanonicalDecompositionReport {
    XPoly augmented_lhs, augmented_rhs;
    XPoly plain_lhs, plain_rhs;

    bool augmented_ok() const { return augmented_lhs == augmented_rhs; }
    bool plain_ok() const { return plain_lhs == plain_rhs; }
    bool ok() const { return augmented_ok() && plain_ok(); }
};

inline CanonicalDecompositionReport check_canonical_decomposition(const Poset& p) {
    detail::require_nontrivial(p, "canonical decomposition needs rank >= 1");
    const int n = p.top_rank();
    const XPoly x = XPoly::monomial(1, 1);

    CanonicalDecompositionReport report;
    report.augmented_lhs = chow_polynomial(p, true);
    report.plain_lhs = chow_polynomial(p, false);
    report.augmented_rhs = XPoly::geometric(n + 1);
    report.plain_rhs = XPoly::geometric(n);
    for (int w = 0; w < p.size(); ++w) {
        if (!(p.less(p.bottom(), w) && p.less(w, p.top()))) continue;
        int k = p.rank(w);
        XPoly upper = chow_polynomial(interval(p, w, p.top()), false);
        report.augmented_rhs += x * XPoly::geometric(k) * upper;
        report.plain_rhs += x * XPoly::geometric(k - 1) * upper;
    }
    return report;
}

} // namespace posetcalc

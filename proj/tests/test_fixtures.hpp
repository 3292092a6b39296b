#pragma once

// Shared builders for the two worked example posets, small helper posets,
// and the polynomial values frozen from independent computation.

#include <initializer_list>
#include <utility>

#include "posetcalc/posetcalc.hpp"

namespace fixtures {

using namespace posetcalc;

// rank 2, three atoms u1 u2 u3
inline Poset poset_p() {
    return build_poset({"0", "u1", "u2", "u3", "1"},
                       {{"0", "u1"}, {"0", "u2"}, {"0", "u3"}, {"u1", "1"}, {"u2", "1"}, {"u3", "1"}});
}

inline EdgeLabeling labeling_p(const Poset& p) {
    EdgeLabeling l;
    auto set = [&](const char* lo, const char* hi, long long v) {
        l.labels[{p.index_of(lo), p.index_of(hi)}] = v;
    };
    set("0", "u1", 1);
    set("0", "u2", 2);
    set("0", "u3", 3);
    set("u1", "1", 2);
    set("u2", "1", 1);
    set("u3", "1", 1);
    return l;
}

// rank 3, two parallel saturated chains
inline Poset poset_q() {
    return build_poset({"0", "v1", "v2", "w1", "w2", "1"},
                       {{"0", "v1"}, {"0", "v2"}, {"v1", "w1"}, {"v2", "w2"}, {"w1", "1"}, {"w2", "1"}});
}

inline Poset chain_poset(int length) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i <= length; ++i) names.push_back("c" + std::to_string(i));
    for (int i = 0; i < length; ++i) covers.emplace_back(names[i], names[i + 1]);
    return build_poset(names, covers);
}

inline Poset trivial_poset() { return build_poset({"0"}, {}); }

// rank 2, two atoms
inline Poset diamond_poset() {
    return build_poset({"0", "a1", "a2", "1"},
                       {{"0", "a1"}, {"0", "a2"}, {"a1", "1"}, {"a2", "1"}});
}

inline NcPoly nc(int degree, std::initializer_list<std::pair<const char*, YPoly>> terms) {
    NcPoly total(degree);
    for (const auto& [w, c] : terms) total += NcPoly::term(AbWord::parse(w), c);
    return total;
}

inline YPoly neg_y_pow(int k) { return YPoly::monomial((k % 2) ? -1 : 1, k); }

// values of the rank-2 example
inline YPoly poincare_p() { return YPoly{1, 3, 2}; }
inline NcPoly psi_p() { return nc(2, {{"aa", 1}, {"ab", 2}}); }
inline NcPoly psi_tilde_p() { return nc(1, {{"a", 1}, {"b", 2}}); }
inline NcPoly expsi_p() {
    return nc(2, {{"aa", 1}, {"ab", YPoly{2, 3}}, {"ba", YPoly{0, 3, 2}}, {"bb", YPoly{0, 0, 1}}});
}
inline NcPoly expsi_tilde_p() { return nc(1, {{"a", YPoly{1, 3, 2}}, {"b", YPoly{2, 3, 1}}}); }
inline XPoly chow_aug_p() { return XPoly{1, 4, 1}; }
inline XPoly chow_p() { return XPoly{1, 1}; }

// values of the rank-3 example
inline YPoly poincare_q() { return YPoly{1, 2, 0, -1}; }
inline NcPoly psi_q() { return nc(3, {{"aaa", 1}, {"aab", 1}, {"aba", 1}, {"abb", -1}}); }
inline NcPoly psi_tilde_q() { return nc(2, {{"aa", 1}, {"ab", 1}, {"ba", 1}, {"bb", -1}}); }
inline NcPoly expsi_q() {
    return nc(3, {{"aaa", 1},
                  {"aab", YPoly{1, 2}},
                  {"aba", YPoly{1, 2}},
                  {"abb", YPoly{-1, 0, 2}},
                  {"baa", YPoly{0, 2, 0, -1}},
                  {"bab", YPoly{0, 0, 2, 1}},
                  {"bba", YPoly{0, 0, 2, 1}},
                  {"bbb", YPoly{0, 0, 0, 1}}});
}
inline NcPoly expsi_tilde_q() {
    return nc(2, {{"aa", YPoly{1, 2, 0, -1}},
                  {"ab", YPoly{1, 2, 2, 1}},
                  {"ba", YPoly{1, 2, 2, 1}},
                  {"bb", YPoly{-1, 0, 2, 1}}});
}
inline XPoly chow_aug_q() { return XPoly{1, 5, 5, 1}; }
inline XPoly chow_q() { return XPoly{1, 3, 1}; }

// seeded random generators for property tests
inline YPoly random_ypoly(Rng& rng, int max_degree) {
    std::vector<long long> coeffs;
    int deg = static_cast<int>(rng.int_in(0, max_degree));
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.int_in(-4, 4));
    return YPoly(std::move(coeffs));
}

inline NcPoly random_ncpoly(Rng& rng, int degree, int coeff_degree) {
    NcPoly total(degree);
    int terms = static_cast<int>(rng.int_in(1, 5));
    for (int t = 0; t < terms; ++t) {
        std::uint64_t bits = rng.next_u64() & ((degree >= 64 ? 0 : (1ULL << degree)) - 1);
        total += NcPoly::term(AbWord::from_b_mask(bits, degree), random_ypoly(rng, coeff_degree));
    }
    return total;
}

inline EdgeLabeling random_labeling(Rng& rng, const Poset& p, long long lo, long long hi) {
    EdgeLabeling l;
    for (const auto& cover : p.covers()) l.labels[cover] = rng.int_in(lo, hi);
    return l;
}

// Distinct positive labels (a random permutation of 1..#covers), so no
// interval can carry a tie along a maximal chain.
inline EdgeLabeling random_injective_labeling(Rng& rng, const Poset& p) {
    std::vector<long long> values;
    for (std::size_t i = 0; i < p.covers().size(); ++i)
        values.push_back(static_cast<long long>(i) + 1);
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng.below(i)]);
    EdgeLabeling l;
    std::size_t next = 0;
    for (const auto& cover : p.covers()) l.labels[cover] = values[next++];
    return l;
}

} // namespace fixtures

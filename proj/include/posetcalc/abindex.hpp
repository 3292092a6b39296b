#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "posetcalc/error.hpp"
#include "posetcalc/ncpoly.hpp"
#include "posetcalc/poset.hpp"

namespace posetcalc {

// Flag f-vector (alpha) or flag h-vector (beta), stored densely over all
// 2^n rank subsets as bitmasks.
struct FlagVector {
    int n = 0;
    std::vector<long long> values;

    long long at(std::uint64_t subset) const { return values[subset]; }
    std::size_t table_size() const { return values.size(); }
};

enum class Method { Chains, Omega, Recursive, Beta };

namespace detail {

constexpr int max_dense_flag_rank = 24;

inline std::uint64_t chain_rank_set(const Poset& p, const Chain& chain) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i)
        mask |= 1ULL << p.rank(chain.elements[i]);
    return mask;
}

} // namespace detail

// alpha(S): the number of chains ending at the maximum whose set of
// non-top ranks is exactly S; computed by a rank-by-rank walk.
inline FlagVector flag_f_vector(const Poset& p) {
    const int n = p.top_rank();
    if (n > detail::max_dense_flag_rank)
        raise(ErrorKind::DenseTableTooLarge, "dense flag table limited to rank 24");

    std::vector<std::vector<int>> by_rank(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v < p.size(); ++v) by_rank[static_cast<std::size_t>(p.rank(v))].push_back(v);

    FlagVector alpha;
    alpha.n = n;
    alpha.values.assign(1ULL << n, 0);
    for (std::uint64_t subset = 0; subset < alpha.values.size(); ++subset) {
        std::vector<long long> counts;
        std::vector<int> elems;
        bool first = true;
        long long total = 1;
        for (int r = 0; r < n; ++r) {
            if (!((subset >> r) & 1)) continue;
            const auto& level = by_rank[static_cast<std::size_t>(r)];
            std::vector<long long> next(level.size(), 0);
            for (std::size_t j = 0; j < level.size(); ++j) {
                if (first) {
                    next[j] = 1;
                } else {
                    for (std::size_t i = 0; i < elems.size(); ++i)
                        if (p.leq(elems[static_cast<std::size_t>(i)], level[j])) next[j] += counts[i];
                }
            }
            counts = std::move(next);
            elems = level;
            first = false;
        }
        if (!first) {
            total = 0;
            for (long long c : counts) total += c;
        }
        alpha.values[subset] = total;
    }
    return alpha;
}

// beta(T) = sum over S ⊆ T of (-1)^{|T\S|} alpha(S), via the in-place
// subset Möbius transform.
inline FlagVector flag_h_vector(const Poset& p) {
    FlagVector beta = flag_f_vector(p);
    for (int i = 0; i < beta.n; ++i)
        for (std::uint64_t mask = 0; mask < beta.values.size(); ++mask)
            if ((mask >> i) & 1) beta.values[mask] -= beta.values[mask ^ (1ULL << i)];
    return beta;
}

namespace detail {

// Psi-tilde of the upper interval [w, top], by the recursion over interior
// elements; memoized per element of the ambient poset.
class PsiTildeRecursion {
public:
    explicit PsiTildeRecursion(const Poset& p) : p_(p), memo_(static_cast<std::size_t>(p.size())) {}

    const NcPoly& at(int w) {
        auto& slot = memo_[static_cast<std::size_t>(w)];
        if (!slot) {
            const int r = p_.top_rank() - p_.rank(w);
            NcPoly result = pow(NcPoly::a_minus_b(), r - 1);
            for (int v = 0; v < p_.size(); ++v) {
                if (!(p_.less(w, v) && p_.less(v, p_.top()))) continue;
                int k = p_.rank(v) - p_.rank(w);
                result += pow(NcPoly::a_minus_b(), k - 1) * NcPoly::letter(Letter::B) * at(v);
            }
            slot = std::move(result);
        }
        return *slot;
    }

private:
    const Poset& p_;
    std::vector<std::optional<NcPoly>> memo_;
};

// Extended counterpart: exPsi-tilde of [w, top], Poincaré-weighted.
class ExPsiTildeRecursion {
public:
    explicit ExPsiTildeRecursion(const Poset& p) : p_(p), memo_(static_cast<std::size_t>(p.size())) {}

    const NcPoly& at(int w) {
        auto& slot = memo_[static_cast<std::size_t>(w)];
        if (!slot) {
            const int r = p_.top_rank() - p_.rank(w);
            NcPoly result = poincare_polynomial(p_, w, p_.top()) * pow(NcPoly::a_minus_b(), r - 1);
            for (int v = 0; v < p_.size(); ++v) {
                if (!(p_.less(w, v) && p_.less(v, p_.top()))) continue;
                int k = p_.rank(v) - p_.rank(w);
                result += poincare_polynomial(p_, w, v) *
                          (pow(NcPoly::a_minus_b(), k - 1) * NcPoly::letter(Letter::B) * at(v));
            }
            slot = std::move(result);
        }
        return *slot;
    }

private:
    const Poset& p_;
    std::vector<std::optional<NcPoly>> memo_;
};

inline void require_nontrivial(const Poset& p, const char* what) {
    if (p.top_rank() == 0) raise(ErrorKind::TrivialPoset, what);
}

[[noreturn]] inline void bad_method(const char* op) {
    throw std::invalid_argument(std::string("method not supported by ") + op);
}

} // namespace detail

// The ab-index: sum of rank-set weights over all chains ending at the top.
inline NcPoly ab_index(const Poset& p, Method method = Method::Chains) {
    const int n = p.top_rank();
    switch (method) {
    case Method::Chains: {
        NcPoly total(n);
        for (const Chain& c : chains_to_top(p))
            total += weight_poly(detail::chain_rank_set(p, c), n);
        return total;
    }
    case Method::Beta: {
        FlagVector beta = flag_h_vector(p);
        NcPoly total(n);
        for (std::uint64_t t = 0; t < beta.table_size(); ++t)
            total += NcPoly::term(flag_word(t, n), YPoly(beta.at(t)));
        return total;
    }
    case Method::Recursive: {
        detail::require_nontrivial(p, "recursive ab-index needs rank >= 1");
        detail::PsiTildeRecursion tilde(p);
        NcPoly total = NcPoly::letter(Letter::A) * pow(NcPoly::a_minus_b(), n - 1);
        for (int w = 0; w < p.size(); ++w) {
            if (!(p.less(p.bottom(), w) && p.less(w, p.top()))) continue;
            total += NcPoly::letter(Letter::A) * pow(NcPoly::a_minus_b(), p.rank(w) - 1) *
                     NcPoly::letter(Letter::B) * tilde.at(w);
        }
        return total;
    }
    default: detail::bad_method("ab_index");
    }
}

// The ab-index over bottom-anchored chains: drops the initial letter.
inline NcPoly ab_index_tilde(const Poset& p, Method method = Method::Chains) {
    detail::require_nontrivial(p, "ab-index tilde needs rank >= 1");
    const int n = p.top_rank();
    switch (method) {
    case Method::Chains: {
        // only chains through the bottom survive iota; their weight loses
        // the leading b
        NcPoly total(n - 1);
        for (const Chain& c : chains_to_top(p)) {
            std::uint64_t s = detail::chain_rank_set(p, c);
            if (s & 1) total += weight_poly(s >> 1, n - 1);
        }
        return total;
    }
    case Method::Beta: return iota(ab_index(p, Method::Beta));
    case Method::Recursive: {
        detail::PsiTildeRecursion tilde(p);
        return tilde.at(p.bottom());
    }
    default: detail::bad_method("ab_index_tilde");
    }
}

// The Poincaré-extended ab-index, computable through four routes that a
// correct implementation must keep in exact agreement: the chain sum, the
// omega rewrite of the plain index, the interval recursion, and the flag
// h-vector expansion.
inline NcPoly extended_ab_index(const Poset& p, Method method = Method::Omega) {
    const int n = p.top_rank();
    switch (method) {
    case Method::Chains: {
        NcPoly total(n);
        for (const Chain& c : chains_to_top(p)) {
            YPoly weight(1);
            for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
                weight *= poincare_polynomial(p, c.elements[i], c.elements[i + 1]);
            total += weight * weight_poly(detail::chain_rank_set(p, c), n);
        }
        return total;
    }
    case Method::Omega: return omega(ab_index(p, Method::Chains));
    case Method::Recursive: {
        detail::require_nontrivial(p, "recursive extended ab-index needs rank >= 1");
        detail::ExPsiTildeRecursion extilde(p);
        NcPoly total = pow(NcPoly::a_minus_b(), n) +
                       poincare_polynomial(p) *
                           (NcPoly::letter(Letter::B) * pow(NcPoly::a_minus_b(), n - 1));
        for (int w = 0; w < p.size(); ++w) {
            if (!(p.less(p.bottom(), w) && p.less(w, p.top()))) continue;
            int k = p.rank(w);
            NcPoly prefix = pow(NcPoly::a_minus_b(), k) +
                            poincare_polynomial(p, p.bottom(), w) *
                                (NcPoly::letter(Letter::B) * pow(NcPoly::a_minus_b(), k - 1));
            total += prefix * NcPoly::letter(Letter::B) * extilde.at(w);
        }
        return total;
    }
    case Method::Beta: {
        FlagVector beta = flag_h_vector(p);
        NcPoly total(n);
        for (std::uint64_t t = 0; t < beta.table_size(); ++t)
            total += YPoly(beta.at(t)) * omega(NcPoly::term(flag_word(t, n), YPoly(1)));
        return total;
    }
    }
    detail::bad_method("extended_ab_index");
}

inline NcPoly extended_ab_index_tilde(const Poset& p, Method method = Method::Omega) {
    detail::require_nontrivial(p, "extended ab-index tilde needs rank >= 1");
    const int n = p.top_rank();
    switch (method) {
    case Method::Chains: {
        NcPoly total(n - 1);
        for (const Chain& c : chains_to_top(p)) {
            std::uint64_t s = detail::chain_rank_set(p, c);
            if (!(s & 1)) continue;
            YPoly weight(1);
            for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
                weight *= poincare_polynomial(p, c.elements[i], c.elements[i + 1]);
            total += weight * weight_poly(s >> 1, n - 1);
        }
        return total;
    }
    case Method::Omega: return YPoly{1, 1} * omega(ab_index_tilde(p, Method::Chains));
    case Method::Recursive: {
        detail::ExPsiTildeRecursion extilde(p);
        return extilde.at(p.bottom());
    }
    default: detail::bad_method("extended_ab_index_tilde");
    }
}

// Fifth route to the extended ab-index: expand over flag h-vector
// coefficients and sign sets E, one monomial per (T, E) pair. Exponential
// in both subsets, for cross-checking only.
inline NcPoly extended_ab_index_sign_expansion(const Poset& p) {
    const int n = p.top_rank();
    FlagVector beta = flag_h_vector(p);
    NcPoly total(n);
    for (std::uint64_t t = 0; t < beta.table_size(); ++t) {
        long long coeff = beta.at(t);
        if (coeff == 0) continue;
        for (std::uint64_t e_bits = 0; e_bits < (1ULL << n); ++e_bits) {
            std::uint64_t e = e_bits << 1; // E ⊆ {1..n}
            total += NcPoly::term(flag_word_signed(t, e, n),
                                  YPoly::monomial(coeff, std::popcount(e)));
        }
    }
    return total;
}

} // namespace posetcalc

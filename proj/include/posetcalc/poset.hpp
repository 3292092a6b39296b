#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetcalc/error.hpp"
#include "posetcalc/poly.hpp"
#include "posetcalc/rng.hpp"

namespace posetcalc {

// Finite graded bounded poset. Construction goes through build_poset, which
// validates boundedness, gradedness and acyclicity; after that the structure
// is immutable and all queries are safe to run concurrently. Element indices
// refer to the order in which names were declared.
class Poset {
public:
    int size() const { return static_cast<int>(names_.size()); }
    int top_rank() const { return n_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    int rank(int v) const { return rank_[static_cast<std::size_t>(v)]; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(std::string_view nm) const {
        for (int i = 0; i < size(); ++i)
            if (names_[static_cast<std::size_t>(i)] == nm) return i;
        raise(ErrorKind::UnknownElement, "no element named '" + std::string(nm) + "'");
    }

    bool leq(int u, int v) const { return leq_[static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v)]; }
    bool less(int u, int v) const { return u != v && leq(u, v); }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int u) const { return up_adj_[static_cast<std::size_t>(u)]; }
    const std::vector<int>& lower_covers(int v) const { return down_adj_[static_cast<std::size_t>(v)]; }

    // elements of [u, w] in (rank, index) order
    std::vector<int> interval_elements(int u, int w) const {
        if (!leq(u, w)) raise(ErrorKind::NotComparable, "interval endpoints are incomparable");
        std::vector<int> elems;
        for (int v = 0; v < size(); ++v)
            if (leq(u, v) && leq(v, w)) elems.push_back(v);
        std::sort(elems.begin(), elems.end(),
                  [&](int x, int y) { return std::pair(rank(x), x) < std::pair(rank(y), y); });
        return elems;
    }

    // Möbius function of the interval [u, w]; values are cached per (u, w)
    // pair for the lifetime of the poset.
    long long mobius(int u, int w) const {
        if (!leq(u, w)) raise(ErrorKind::NotComparable, "mobius needs comparable arguments");
        std::lock_guard lock(cache_->mutex);
        auto hit = cache_->values.find({u, w});
        if (hit != cache_->values.end()) return hit->second;
        // Fill mu(u, v) for the whole interval in rank order; every value
        // only needs strictly lower elements of the same interval.
        for (int v : interval_elements(u, w)) {
            auto key = std::pair(u, v);
            if (cache_->values.count(key)) continue;
            long long mu;
            if (v == u) {
                mu = 1;
            } else {
                mu = 0;
                for (int z = 0; z < size(); ++z)
                    if (leq(u, z) && less(z, v)) mu -= cache_->values.at({u, z});
            }
            cache_->values.emplace(key, mu);
        }
        return cache_->values.at({u, w});
    }

private:
    friend Poset build_poset(const std::vector<std::string>&,
                             const std::vector<std::pair<std::string, std::string>>&);

    struct MobiusCache {
        std::mutex mutex;
        std::map<std::pair<int, int>, long long> values;
    };

    std::vector<std::string> names_;
    std::vector<int> rank_;
    int n_ = 0;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_adj_;
    std::vector<std::vector<int>> down_adj_;
    std::vector<bool> leq_;
    std::shared_ptr<MobiusCache> cache_;
};

// Ranks and the order relation are derived, so structural equality is
// equality of names and covers.
inline bool operator==(const Poset& a, const Poset& b) {
    return a.names() == b.names() && a.covers() == b.covers();
}

// Chain ending at the maximum element; elements strictly increase.
struct Chain {
    std::vector<int> elements;
};

inline Poset build_poset(const std::vector<std::string>& element_names,
                         const std::vector<std::pair<std::string, std::string>>& cover_names) {
    const int count = static_cast<int>(element_names.size());
    if (count == 0) raise(ErrorKind::NotBounded, "poset needs at least one element");
    {
        std::set<std::string_view> seen;
        for (const auto& nm : element_names)
            if (!seen.insert(nm).second)
                throw std::invalid_argument("duplicate element name '" + nm + "'");
    }

    std::map<std::string_view, int> index;
    for (int i = 0; i < count; ++i) index.emplace(element_names[static_cast<std::size_t>(i)], i);

    std::set<std::pair<int, int>> cover_set;
    for (const auto& [lo, hi] : cover_names) {
        auto lo_it = index.find(lo);
        auto hi_it = index.find(hi);
        if (lo_it == index.end() || hi_it == index.end())
            raise(ErrorKind::UnknownElement, "cover references undeclared element");
        cover_set.emplace(lo_it->second, hi_it->second);
    }

    Poset p;
    p.names_ = element_names;
    p.covers_.assign(cover_set.begin(), cover_set.end());
    p.up_adj_.assign(static_cast<std::size_t>(count), {});
    p.down_adj_.assign(static_cast<std::size_t>(count), {});
    for (const auto& [u, v] : p.covers_) {
        p.up_adj_[static_cast<std::size_t>(u)].push_back(v);
        p.down_adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    // topological order of the cover digraph
    std::vector<int> indegree(static_cast<std::size_t>(count), 0);
    for (const auto& [u, v] : p.covers_) { (void)u; ++indegree[static_cast<std::size_t>(v)]; }
    std::vector<int> topo;
    for (int v = 0; v < count; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) topo.push_back(v);
    for (std::size_t head = 0; head < topo.size(); ++head)
        for (int v : p.up_adj_[static_cast<std::size_t>(topo[head])])
            if (--indegree[static_cast<std::size_t>(v)] == 0) topo.push_back(v);
    if (static_cast<int>(topo.size()) != count)
        raise(ErrorKind::CyclicCovers, "cover relation contains a cycle");

    std::vector<int> minimals, maximals;
    for (int v = 0; v < count; ++v) {
        if (p.down_adj_[static_cast<std::size_t>(v)].empty()) minimals.push_back(v);
        if (p.up_adj_[static_cast<std::size_t>(v)].empty()) maximals.push_back(v);
    }
    if (minimals.size() != 1 || maximals.size() != 1)
        raise(ErrorKind::NotBounded, "poset must have a unique minimum and a unique maximum");
    p.bottom_ = minimals.front();
    p.top_ = maximals.front();

    // propagate ranks from the bottom; every cover must raise rank by one
    p.rank_.assign(static_cast<std::size_t>(count), -1);
    p.rank_[static_cast<std::size_t>(p.bottom_)] = 0;
    for (int u : topo) {
        if (p.rank_[static_cast<std::size_t>(u)] < 0)
            raise(ErrorKind::NotGraded, "element unreachable from the minimum");
        for (int v : p.up_adj_[static_cast<std::size_t>(u)]) {
            int want = p.rank_[static_cast<std::size_t>(u)] + 1;
            int& rv = p.rank_[static_cast<std::size_t>(v)];
            if (rv < 0) rv = want;
            else if (rv != want)
                raise(ErrorKind::NotGraded, "cover does not raise rank by exactly one");
        }
    }
    p.n_ = p.rank_[static_cast<std::size_t>(p.top_)];
    if (p.n_ > 32) raise(ErrorKind::RankTooLarge, "rank exceeds the supported maximum of 32");

    // reflexive-transitive closure along covers, highest rank first
    p.leq_.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), false);
    for (std::size_t head = topo.size(); head-- > 0;) {
        int u = topo[head];
        auto row = static_cast<std::size_t>(u) * static_cast<std::size_t>(count);
        p.leq_[row + static_cast<std::size_t>(u)] = true;
        for (int v : p.up_adj_[static_cast<std::size_t>(u)]) {
            auto vrow = static_cast<std::size_t>(v) * static_cast<std::size_t>(count);
            for (int w = 0; w < count; ++w)
                if (p.leq_[vrow + static_cast<std::size_t>(w)]) p.leq_[row + static_cast<std::size_t>(w)] = true;
        }
    }

    for (auto& adj : p.up_adj_) std::sort(adj.begin(), adj.end());
    for (auto& adj : p.down_adj_) std::sort(adj.begin(), adj.end());
    p.cache_ = std::make_shared<Poset::MobiusCache>();
    return p;
}

// Materialize [u, w] as a poset of its own, re-indexed, names inherited.
inline Poset interval(const Poset& p, int u, int w) {
    std::vector<int> elems = p.interval_elements(u, w);
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (int v : elems) names.push_back(p.name(v));
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : p.covers())
        if (p.leq(u, a) && p.leq(b, w) && p.leq(u, b) && p.leq(a, w))
            covers.emplace_back(p.name(a), p.name(b));
    return build_poset(names, covers);
}

inline long long mobius(const Poset& p, int u, int w) { return p.mobius(u, w); }

// Poincaré polynomial of the interval [u, w].
inline YPoly poincare_polynomial(const Poset& p, int u, int w) {
    if (!p.leq(u, w)) raise(ErrorKind::NotComparable, "interval endpoints are incomparable");
    YPoly total;
    for (int v : p.interval_elements(u, w)) {
        int k = p.rank(v) - p.rank(u);
        total += YPoly::monomial(p.mobius(u, v) * ((k % 2) ? -1 : 1), k);
    }
    return total;
}

inline YPoly poincare_polynomial(const Poset& p) {
    return poincare_polynomial(p, p.bottom(), p.top());
}

// Characteristic polynomial, the rank-reversed Möbius generating function.
inline TPoly characteristic_polynomial(const Poset& p) {
    TPoly total;
    for (int v = 0; v < p.size(); ++v)
        if (p.leq(p.bottom(), v))
            total += TPoly::monomial(p.mobius(p.bottom(), v), p.top_rank() - p.rank(v));
    return total;
}

// All chains ending at the maximum element, the singleton {top} included,
// in lexicographic order of their element-index sequences.
inline std::vector<Chain> chains_to_top(const Poset& p) {
    std::vector<Chain> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int last) -> void {
        if (last == p.top()) {
            out.push_back(Chain{current});
            return;
        }
        for (int v = 0; v < p.size(); ++v) {
            if (!p.less(last, v)) continue;
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    for (int v = 0; v < p.size(); ++v) {
        current.assign(1, v);
        extend(extend, v);
    }
    return out;
}

// Maximal chains from bottom to top (one element of every rank).
inline std::vector<Chain> maximal_chains(const Poset& p) {
    std::vector<Chain> out;
    std::vector<int> current{p.bottom()};
    auto walk = [&](auto&& self, int last) -> void {
        if (last == p.top()) {
            out.push_back(Chain{current});
            return;
        }
        for (int v : p.upper_covers(last)) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    walk(walk, p.bottom());
    return out;
}

inline void check_chain(const Poset& p, const Chain& chain) {
    if (chain.elements.empty() || chain.elements.back() != p.top())
        raise(ErrorKind::InvalidChain, "chain must end at the maximum element");
    for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i)
        if (!p.less(chain.elements[i], chain.elements[i + 1]))
            raise(ErrorKind::InvalidChain, "chain elements must strictly increase");
    for (int v : chain.elements)
        if (v < 0 || v >= p.size()) raise(ErrorKind::InvalidChain, "chain element out of range");
}

// Product of the interval Poincaré polynomials along the chain; the
// singleton chain {top} gives the empty product 1.
inline YPoly chain_poincare_polynomial(const Poset& p, const Chain& chain) {
    check_chain(p, chain);
    YPoly total(1);
    for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i)
        total *= poincare_polynomial(p, chain.elements[i], chain.elements[i + 1]);
    return total;
}

// Deterministic random graded poset: a chain of rank levels with sampled
// covers between consecutive levels, patched so that every element has at
// least one cover in each direction. Always passes build_poset validation.
inline Poset random_graded_poset(std::uint64_t seed, int max_rank, int max_width) {
    if (max_rank < 1 || max_width < 1)
        throw std::invalid_argument("random_graded_poset needs max_rank >= 1 and max_width >= 1");
    Rng rng(seed);
    const int n = static_cast<int>(rng.int_in(1, max_rank));

    std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(n) + 1);
    levels.front() = {"0"};
    levels.back() = {"1"};
    for (int r = 1; r < n; ++r) {
        int width = static_cast<int>(rng.int_in(1, max_width));
        for (int i = 0; i < width; ++i)
            levels[static_cast<std::size_t>(r)].push_back("e" + std::to_string(r) + "_" + std::to_string(i));
    }

    std::vector<std::string> names;
    for (const auto& level : levels) names.insert(names.end(), level.begin(), level.end());

    std::vector<std::pair<std::string, std::string>> covers;
    for (int r = 0; r < n; ++r) {
        const auto& lower = levels[static_cast<std::size_t>(r)];
        const auto& upper = levels[static_cast<std::size_t>(r) + 1];
        std::vector<std::vector<bool>> picked(lower.size(), std::vector<bool>(upper.size(), false));
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = 0; j < upper.size(); ++j) picked[i][j] = rng.coin();
        for (std::size_t i = 0; i < lower.size(); ++i) {
            if (std::none_of(picked[i].begin(), picked[i].end(), [](bool b) { return b; }))
                picked[i][rng.below(upper.size())] = true;
        }
        for (std::size_t j = 0; j < upper.size(); ++j) {
            bool covered = false;
            for (std::size_t i = 0; i < lower.size(); ++i) covered = covered || picked[i][j];
            if (!covered) picked[rng.below(lower.size())][j] = true;
        }
        for (std::size_t i = 0; i < lower.size(); ++i)
            for (std::size_t j = 0; j < upper.size(); ++j)
                if (picked[i][j]) covers.emplace_back(lower[i], upper[j]);
    }
    return build_poset(names, covers);
}

} // namespace posetcalc

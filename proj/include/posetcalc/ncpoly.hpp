#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "posetcalc/error.hpp"
#include "posetcalc/poly.hpp"

namespace posetcalc {

enum class Letter : unsigned { A = 0, B = 1 };

// Fixed-length word over {a, b}. Bit i of `bits_` is set exactly when the
// letter at position i is b; position 0 is the leftmost letter. Length is
// capped at 32 so that every word operation stays O(1) on one machine word.
class AbWord {
public:
    static constexpr int max_length = 32;

    AbWord() = default;

    // b exactly at the positions of `b_positions` (bits 0..n-1)
    static AbWord from_b_mask(std::uint64_t b_positions, int n) {
        check_length(n);
        AbWord w;
        w.len_ = n;
        w.bits_ = b_positions & low_bits(n);
        return w;
    }

    static AbWord parse(std::string_view s) {
        check_length(static_cast<int>(s.size()));
        AbWord w;
        for (char ch : s) {
            if (ch == 'a') w = w.appended(Letter::A);
            else if (ch == 'b') w = w.appended(Letter::B);
            else raise(ErrorKind::ParseError, "ab-word may contain only 'a' and 'b'");
        }
        return w;
    }

    int length() const { return len_; }

    Letter at(int i) const {
        if (i < 0 || i >= len_) raise(ErrorKind::IndexOutOfRange, "word position out of range");
        return ((bits_ >> i) & 1) ? Letter::B : Letter::A;
    }
    bool is_b(int i) const { return at(i) == Letter::B; }

    std::uint64_t b_mask() const { return bits_; }
    int b_count() const { return std::popcount(bits_); }

    AbWord appended(Letter l) const {
        check_length(len_ + 1);
        AbWord w = *this;
        if (l == Letter::B) w.bits_ |= (1ULL << w.len_);
        w.len_ += 1;
        return w;
    }

    AbWord concat(const AbWord& o) const {
        check_length(len_ + o.len_);
        AbWord w = *this;
        w.bits_ |= o.bits_ << w.len_;
        w.len_ += o.len_;
        return w;
    }

    // drop the leftmost letter
    AbWord tail() const {
        if (len_ == 0) raise(ErrorKind::ZeroDegree, "tail of the empty word");
        AbWord w;
        w.len_ = len_ - 1;
        w.bits_ = (bits_ >> 1) & low_bits(w.len_);
        return w;
    }

    std::string str() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(len_));
        for (int i = 0; i < len_; ++i) s += is_b(i) ? 'b' : 'a';
        return s;
    }

    friend bool operator==(const AbWord& x, const AbWord& y) {
        return x.len_ == y.len_ && x.bits_ == y.bits_;
    }

    // shorter first, then lexicographic with a < b
    friend bool operator<(const AbWord& x, const AbWord& y) {
        if (x.len_ != y.len_) return x.len_ < y.len_;
        std::uint64_t diff = x.bits_ ^ y.bits_;
        if (diff == 0) return false;
        int pos = std::countr_zero(diff); // leftmost differing position
        return ((x.bits_ >> pos) & 1) == 0;
    }

private:
    static void check_length(int n) {
        if (n < 0 || n > max_length) raise(ErrorKind::WordTooLong, "ab-word length exceeds 32");
    }
    static std::uint64_t low_bits(int n) {
        return n >= 64 ? ~0ULL : (1ULL << n) - 1;
    }

    std::uint64_t bits_ = 0;
    int len_ = 0;
};

// Homogeneous element of Z[y]<a,b>: a finite map from words of one shared
// length to y-polynomial coefficients. The zero polynomial keeps an explicit
// degree so that homogeneity stays checkable through every operation.
class NcPoly {
public:
    explicit NcPoly(int degree = 0) : degree_(degree) {
        if (degree < 0 || degree > AbWord::max_length)
            raise(ErrorKind::WordTooLong, "degree out of range");
    }

    static NcPoly term(const AbWord& w, YPoly c) {
        NcPoly p(w.length());
        if (!c.is_zero()) p.terms_.emplace(w, std::move(c));
        return p;
    }
    static NcPoly one() { return term(AbWord(), YPoly(1)); }
    static NcPoly letter(Letter l) { return term(AbWord().appended(l), YPoly(1)); }
    static NcPoly a_minus_b() { return letter(Letter::A) - letter(Letter::B); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AbWord, YPoly>& terms() const { return terms_; }

    YPoly coeff(const AbWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? YPoly() : it->second;
    }

    friend bool operator==(const NcPoly& f, const NcPoly& g) {
        if (f.is_zero() && g.is_zero()) return true;
        return f.degree_ == g.degree_ && f.terms_ == g.terms_;
    }

    NcPoly& operator+=(const NcPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (degree_ != o.degree_)
            raise(ErrorKind::DegreeMismatch, "adding inhomogeneous polynomials");
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) { return *this += -o; }

    NcPoly operator-() const {
        NcPoly r(degree_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
    friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }

    // concatenation product; degrees add
    friend NcPoly operator*(const NcPoly& f, const NcPoly& g) {
        if (f.degree_ + g.degree_ > AbWord::max_length)
            raise(ErrorKind::WordTooLong, "product degree exceeds 32");
        NcPoly r(f.degree_ + g.degree_);
        for (const auto& [wf, cf] : f.terms_)
            for (const auto& [wg, cg] : g.terms_) r.add_term(wf.concat(wg), cf * cg);
        return r;
    }
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

    friend NcPoly operator*(const YPoly& c, const NcPoly& f) {
        NcPoly r(f.degree_);
        if (c.is_zero()) return r;
        for (const auto& [w, fc] : f.terms_) r.terms_.emplace(w, c * fc);
        return r;
    }

private:
    void add_term(const AbWord& w, const YPoly& c) {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int degree_;
    std::map<AbWord, YPoly> terms_;
};

inline NcPoly pow(const NcPoly& base, int exp) {
    NcPoly r = NcPoly::one();
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace detail {

inline const NcPoly& omega_pair_block() {
    // ab -> (1+y)ab + (y+y^2)ba
    static const NcPoly p = YPoly{1, 1} * NcPoly::term(AbWord::parse("ab"), YPoly(1)) +
                            YPoly{0, 1, 1} * NcPoly::term(AbWord::parse("ba"), YPoly(1));
    return p;
}
inline const NcPoly& omega_a_block() {
    // a -> a + yb
    static const NcPoly p = NcPoly::letter(Letter::A) + YPoly{0, 1} * NcPoly::letter(Letter::B);
    return p;
}
inline const NcPoly& omega_b_block() {
    // b -> b + ya
    static const NcPoly p = NcPoly::letter(Letter::B) + YPoly{0, 1} * NcPoly::letter(Letter::A);
    return p;
}

} // namespace detail

// The omega transformation: every occurrence of the factor ab is replaced by
// (1+y)ab + (y+y^2)ba, every remaining a by a+yb and every remaining b by
// b+ya. Occurrences of ab can never overlap, so the word splits uniquely
// into blocks whose images multiply out left to right.
inline NcPoly omega(const NcPoly& f) {
    NcPoly result(f.degree());
    for (const auto& [w, c] : f.terms()) {
        const int n = w.length();
        std::uint64_t occurrences = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (!w.is_b(i) && w.is_b(i + 1)) occurrences |= 1ULL << i;
        assert((occurrences & (occurrences >> 1)) == 0 && "ab-occurrences must be disjoint");

        NcPoly expanded = NcPoly::one();
        for (int i = 0; i < n;) {
            if (occurrences & (1ULL << i)) {
                expanded *= detail::omega_pair_block();
                i += 2;
            } else {
                expanded *= w.is_b(i) ? detail::omega_b_block() : detail::omega_a_block();
                i += 1;
            }
        }
        result += c * expanded;
    }
    return result;
}

// The iota transformation: drop the initial letter of every word, merging
// coefficients of equal tails. Degree decreases by one.
inline NcPoly iota(const NcPoly& f) {
    if (f.degree() == 0) raise(ErrorKind::ZeroDegree, "iota needs degree >= 1");
    NcPoly r(f.degree() - 1);
    for (const auto& [w, c] : f.terms()) r += NcPoly::term(w.tail(), c);
    return r;
}

namespace detail {

inline void check_subset_range(std::uint64_t subset, int lo, int hi, const char* what) {
    std::uint64_t allowed = 0;
    for (int i = lo; i <= hi; ++i) allowed |= 1ULL << i;
    if ((subset & ~allowed) != 0) raise(ErrorKind::IndexOutOfRange, what);
}

} // namespace detail

// Weight of a rank subset S ⊆ {0..n-1}: the product w_0 ... w_{n-1} with
// w_k = b for k in S and w_k = a-b otherwise.
inline NcPoly weight_poly(std::uint64_t subset, int n) {
    if (n > AbWord::max_length) raise(ErrorKind::WordTooLong, "weight degree exceeds 32");
    detail::check_subset_range(subset, 0, n - 1, "weight subset not within {0..n-1}");
    NcPoly r = NcPoly::one();
    for (int k = 0; k < n; ++k)
        r *= (subset >> k) & 1 ? NcPoly::letter(Letter::B) : NcPoly::a_minus_b();
    return r;
}

// Flag monomial of T ⊆ {0..n-1}: b at the positions of T, a elsewhere.
inline AbWord flag_word(std::uint64_t t_subset, int n) {
    detail::check_subset_range(t_subset, 0, n - 1, "flag subset not within {0..n-1}");
    return AbWord::from_b_mask(t_subset, n);
}

// Flag monomial of T adjusted by a sign set E ⊆ {1..n}: position i flips
// a -> b when i+1 is in E, and b -> a when i is in E. The two rules key on
// different letters, so each position is rewritten at most once.
inline AbWord flag_word_signed(std::uint64_t t_subset, std::uint64_t e_subset, int n) {
    AbWord base = flag_word(t_subset, n);
    detail::check_subset_range(e_subset, 1, n, "sign subset not within {1..n}");
    std::uint64_t b_mask = base.b_mask();
    for (int i = 0; i < n; ++i) {
        bool was_b = (t_subset >> i) & 1;
        if (!was_b && ((e_subset >> (i + 1)) & 1)) b_mask |= 1ULL << i;
        if (was_b && ((e_subset >> i) & 1)) b_mask &= ~(1ULL << i);
    }
    return AbWord::from_b_mask(b_mask, n);
}

// Evaluate into Z[x]: substitute y in every coefficient, send each word to
// the (commuting) product of the images of its letters, and sum.
inline XPoly evaluate(const NcPoly& f, const XPoly& a_to, const XPoly& b_to, const XPoly& y_to) {
    XPoly total;
    for (const auto& [w, c] : f.terms()) {
        int bs = w.b_count();
        XPoly word_value = pow(a_to, w.length() - bs) * pow(b_to, bs);
        total += c.substituted(y_to) * word_value;
    }
    return total;
}

// Specialize y = 0 coefficientwise.
inline NcPoly at_y_zero(const NcPoly& f) {
    NcPoly r(f.degree());
    for (const auto& [w, c] : f.terms()) r += NcPoly::term(w, YPoly(c.constant_term()));
    return r;
}

// Canonical rendering: terms sorted by word (a < b), each coefficient
// printed in ascending powers of y inside parentheses. The empty word
// renders as "1".
inline std::string to_string(const NcPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")·";
        out += w.length() == 0 ? "1" : w.str();
    }
    return out;
}

} // namespace posetcalc

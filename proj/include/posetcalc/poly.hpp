#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "posetcalc/error.hpp"

namespace posetcalc {

// Dense univariate polynomial over the integers, canonical form without
// trailing zero coefficients (the zero polynomial has an empty coefficient
// vector). The variable letter is part of the type, so y-, x- and
// t-polynomials do not mix silently.
template <char Var>
class DensePoly {
public:
    using Coeff = long long;

    DensePoly() = default;
    DensePoly(Coeff constant) : coeffs_(constant == 0 ? 0 : 1, constant) {}
    DensePoly(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }
    explicit DensePoly(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

    static constexpr char variable = Var;

    // c * Var^p
    static DensePoly monomial(Coeff c, int power) {
        if (c == 0) return DensePoly();
        std::vector<Coeff> cs(static_cast<std::size_t>(power) + 1, 0);
        cs.back() = c;
        return DensePoly(std::move(cs));
    }

    // 1 + Var + ... + Var^(k-1), the exact quotient (1 - Var^k) / (1 - Var)
    static DensePoly geometric(int k) {
        return DensePoly(std::vector<Coeff>(static_cast<std::size_t>(k), 1));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Coeff coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    Coeff constant_term() const { return coeff(0); }
    Coeff leading_coeff() const { return is_zero() ? 0 : coeffs_.back(); }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) { return *this += -o; }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<Coeff> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return DensePoly(std::move(cs));
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    // Integer evaluation, Horner.
    Coeff operator()(Coeff v) const {
        Coeff r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * v + coeffs_[i];
        return r;
    }

    // Substitute the variable by a polynomial in another variable.
    template <char W>
    DensePoly<W> substituted(const DensePoly<W>& arg) const {
        DensePoly<W> r;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * arg + DensePoly<W>(coeffs_[i]);
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using YPoly = DensePoly<'y'>;
using XPoly = DensePoly<'x'>;
using TPoly = DensePoly<'t'>;

template <char Var>
DensePoly<Var> pow(const DensePoly<Var>& base, int exp) {
    DensePoly<Var> r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Long division over the integers; fails unless every elimination step
// divides exactly.
template <char Var>
std::pair<DensePoly<Var>, DensePoly<Var>> divmod(const DensePoly<Var>& num, const DensePoly<Var>& den) {
    if (den.is_zero()) raise(ErrorKind::InexactDivision, "division by the zero polynomial");
    std::vector<long long> rem(num.coeffs());
    std::vector<long long> quot;
    int dn = den.degree();
    long long lead = den.leading_coeff();
    if (static_cast<int>(rem.size()) - 1 >= dn)
        quot.assign(rem.size() - static_cast<std::size_t>(dn), 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dn; --i) {
        if (rem[static_cast<std::size_t>(i)] == 0) continue;
        if (rem[static_cast<std::size_t>(i)] % lead != 0)
            raise(ErrorKind::InexactDivision, "leading coefficient does not divide");
        long long q = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dn)] = q;
        for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(i - dn + j)] -= q * den.coeff(j);
    }
    return {DensePoly<Var>(std::move(quot)), DensePoly<Var>(std::move(rem))};
}

template <char Var>
DensePoly<Var> exact_div(const DensePoly<Var>& num, const DensePoly<Var>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) raise(ErrorKind::InexactDivision, "nonzero remainder");
    return q;
}

// Canonical rendering: ascending powers, zero coefficients omitted, "^"
// exponent marker, spaces around "+"/"-". Unit coefficients drop the "1"
// except in the constant term, e.g. "1 + 3y + 2y^2", "2 - 3t + t^2".
template <char Var>
std::string to_string(const DensePoly<Var>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        long long c = p.coeff(i);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) out += std::to_string(a);
        if (i >= 1) {
            out += Var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace posetcalc

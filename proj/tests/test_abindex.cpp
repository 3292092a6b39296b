#include <catch2/catch.hpp>

#include <map>

#include "test_fixtures.hpp"

using namespace posetcalc;
using fixtures::nc;
using fixtures::neg_y_pow;

namespace {

// Flag oracle built from plain chain enumeration, independent of the
// rank-walk used by flag_f_vector.
std::map<std::uint64_t, long long> alpha_by_chains(const Poset& p) {
    std::map<std::uint64_t, long long> counts;
    for (std::uint64_t s = 0; s < (1ULL << p.top_rank()); ++s) counts[s] = 0;
    for (const Chain& c : chains_to_top(p)) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
            mask |= 1ULL << p.rank(c.elements[i]);
        counts[mask] += 1;
    }
    return counts;
}

long long beta_by_inclusion_exclusion(const std::map<std::uint64_t, long long>& alpha,
                                      std::uint64_t t) {
    long long total = 0;
    std::uint64_t s = t;
    while (true) {
        int dropped = std::popcount(t ^ s);
        total += (dropped % 2 ? -1 : 1) * alpha.at(s);
        if (s == 0) break;
        s = (s - 1) & t;
    }
    return total;
}

void check_flag_vectors_against_oracle(const Poset& p) {
    auto oracle = alpha_by_chains(p);
    FlagVector alpha = flag_f_vector(p);
    FlagVector beta = flag_h_vector(p);
    for (std::uint64_t s = 0; s < alpha.table_size(); ++s) {
        REQUIRE(alpha.at(s) == oracle.at(s));
        REQUIRE(beta.at(s) == beta_by_inclusion_exclusion(oracle, s));
    }
}

const std::vector<Poset>& random_suite() {
    static const std::vector<Poset> suite = [] {
        std::vector<Poset> out;
        for (std::uint64_t seed = 1; seed <= 60; ++seed)
            out.push_back(random_graded_poset(seed, 4, 4));
        return out;
    }();
    return suite;
}

} // namespace

TEST_CASE("flag vectors of the rank-2 example") {
    Poset p = fixtures::poset_p();
    FlagVector alpha = flag_f_vector(p);
    FlagVector beta = flag_h_vector(p);
    REQUIRE(alpha.at(0b00) == 1);
    REQUIRE(alpha.at(0b01) == 1);
    REQUIRE(alpha.at(0b10) == 3);
    REQUIRE(alpha.at(0b11) == 3);
    REQUIRE(beta.at(0b00) == 1);
    REQUIRE(beta.at(0b01) == 0);
    REQUIRE(beta.at(0b10) == 2);
    REQUIRE(beta.at(0b11) == 0);
    check_flag_vectors_against_oracle(p);
}

TEST_CASE("flag vectors of the rank-3 example") {
    Poset q = fixtures::poset_q();
    FlagVector alpha = flag_f_vector(q);
    FlagVector beta = flag_h_vector(q);
    REQUIRE(alpha.at(0b010) == 2);
    REQUIRE(alpha.at(0b100) == 2);
    REQUIRE(alpha.at(0b110) == 2);
    REQUIRE(alpha.at(0b000) == 1);
    REQUIRE(beta.at(0b000) == 1);
    REQUIRE(beta.at(0b010) == 1);
    REQUIRE(beta.at(0b100) == 1);
    REQUIRE(beta.at(0b110) == -1);
    check_flag_vectors_against_oracle(q);
}

TEST_CASE("flag vector properties on random posets") {
    for (const Poset& p : random_suite()) {
        check_flag_vectors_against_oracle(p);
        FlagVector alpha = flag_f_vector(p);
        FlagVector beta = flag_h_vector(p);
        // only the bottom has rank 0
        REQUIRE(alpha.at(0b1) == 1);
        long long total = 0;
        for (std::uint64_t s = 0; s < alpha.table_size(); ++s) {
            total += alpha.at(s);
            // alpha(S) recovered as the subset sum of beta
            long long from_beta = 0;
            std::uint64_t t = s;
            while (true) {
                from_beta += beta.at(t);
                if (t == 0) break;
                t = (t - 1) & s;
            }
            REQUIRE(from_beta == alpha.at(s));
            // beta vanishes whenever rank 0 is selected
            if (s & 1) REQUIRE(beta.at(s) == 0);
        }
        REQUIRE(total == static_cast<long long>(chains_to_top(p).size()));
    }
}

TEST_CASE("dense flag table cap") {
    REQUIRE_THROWS_AS(flag_f_vector(fixtures::chain_poset(25)), Error);
    REQUIRE(flag_f_vector(fixtures::chain_poset(10)).table_size() == 1024);
}

TEST_CASE("ab-index of the examples") {
    REQUIRE(ab_index(fixtures::poset_p()) == fixtures::psi_p());
    REQUIRE(ab_index(fixtures::poset_q()) == fixtures::psi_q());
    REQUIRE(ab_index(fixtures::chain_poset(1)) == NcPoly::letter(Letter::A));
    REQUIRE(ab_index(fixtures::trivial_poset()) == NcPoly::one());
}

TEST_CASE("ab-index paths agree") {
    for (const Poset& p : {fixtures::poset_p(), fixtures::poset_q()}) {
        NcPoly reference = ab_index(p, Method::Chains);
        REQUIRE(ab_index(p, Method::Beta) == reference);
        REQUIRE(ab_index(p, Method::Recursive) == reference);
    }
    for (const Poset& p : random_suite()) {
        NcPoly reference = ab_index(p, Method::Chains);
        REQUIRE(ab_index(p, Method::Beta) == reference);
        REQUIRE(ab_index(p, Method::Recursive) == reference);
    }
    REQUIRE_THROWS_AS(ab_index(fixtures::trivial_poset(), Method::Recursive), Error);
    REQUIRE_THROWS_AS(ab_index(fixtures::poset_p(), Method::Omega), std::invalid_argument);
}

TEST_CASE("tilde ab-index") {
    REQUIRE(ab_index_tilde(fixtures::poset_p()) == fixtures::psi_tilde_p());
    REQUIRE(ab_index_tilde(fixtures::poset_q()) == fixtures::psi_tilde_q());
    REQUIRE(ab_index_tilde(fixtures::chain_poset(1)) == NcPoly::one());
    REQUIRE_THROWS_AS(ab_index_tilde(fixtures::trivial_poset()), Error);

    for (const Poset& p : random_suite()) {
        NcPoly reference = ab_index_tilde(p, Method::Chains);
        REQUIRE(reference == iota(ab_index(p)));
        REQUIRE(ab_index_tilde(p, Method::Beta) == reference);
        REQUIRE(ab_index_tilde(p, Method::Recursive) == reference);
    }
}

TEST_CASE("extended ab-index of the examples") {
    REQUIRE(extended_ab_index(fixtures::poset_p()) == fixtures::expsi_p());
    REQUIRE(extended_ab_index(fixtures::poset_q()) == fixtures::expsi_q());
    REQUIRE(extended_ab_index(fixtures::chain_poset(1)) ==
            nc(1, {{"a", 1}, {"b", YPoly{0, 1}}}));
    REQUIRE(extended_ab_index(fixtures::trivial_poset()) == NcPoly::one());
}

TEST_CASE("extended ab-index paths agree") {
    for (const Poset& p : random_suite()) {
        NcPoly reference = extended_ab_index(p, Method::Chains);
        REQUIRE(extended_ab_index(p, Method::Omega) == reference);
        REQUIRE(extended_ab_index(p, Method::Recursive) == reference);
        REQUIRE(extended_ab_index(p, Method::Beta) == reference);
        REQUIRE(extended_ab_index_sign_expansion(p) == reference);
        REQUIRE(at_y_zero(reference) == ab_index(p, Method::Chains));
    }
    REQUIRE_THROWS_AS(extended_ab_index(fixtures::trivial_poset(), Method::Recursive), Error);
}

TEST_CASE("extended tilde ab-index") {
    REQUIRE(extended_ab_index_tilde(fixtures::poset_p()) == fixtures::expsi_tilde_p());
    REQUIRE(extended_ab_index_tilde(fixtures::poset_q()) == fixtures::expsi_tilde_q());
    REQUIRE(extended_ab_index_tilde(fixtures::chain_poset(1)) == YPoly{1, 1} * NcPoly::one());
    REQUIRE_THROWS_AS(extended_ab_index_tilde(fixtures::trivial_poset()), Error);

    for (const Poset& p : random_suite()) {
        NcPoly reference = extended_ab_index_tilde(p, Method::Chains);
        REQUIRE(extended_ab_index_tilde(p, Method::Omega) == reference);
        REQUIRE(extended_ab_index_tilde(p, Method::Recursive) == reference);
        REQUIRE(reference == iota(extended_ab_index(p)));
        REQUIRE(reference == YPoly{1, 1} * omega(ab_index_tilde(p)));
        REQUIRE(at_y_zero(reference) == ab_index_tilde(p));
    }
}

TEST_CASE("sign expansion on small chains") {
    // rank 1: T can only be empty, E ranges over {}, {1}
    REQUIRE(extended_ab_index_sign_expansion(fixtures::chain_poset(1)) ==
            nc(1, {{"a", 1}, {"b", YPoly{0, 1}}}));
    REQUIRE(extended_ab_index_sign_expansion(fixtures::poset_p()) == fixtures::expsi_p());
    REQUIRE(extended_ab_index_sign_expansion(fixtures::poset_q()) == fixtures::expsi_q());
}

TEST_CASE("omega of the ab-index satisfies the closed recursion") {
    auto check = [](const Poset& p) {
        const int n = p.top_rank();
        const NcPoly A = NcPoly::letter(Letter::A);
        const NcPoly B = NcPoly::letter(Letter::B);
        const NcPoly AmB = NcPoly::a_minus_b();

        NcPoly full_rhs = (A - neg_y_pow(n) * B) * pow(AmB, n - 1);
        NcPoly tilde_rhs = exact_div(YPoly{1} - neg_y_pow(n), YPoly{1, 1}) * pow(AmB, n - 1);
        for (int w = 0; w < p.size(); ++w) {
            if (!(p.less(p.bottom(), w) && p.less(w, p.top()))) continue;
            int k = p.rank(w);
            NcPoly upper_tilde = omega(ab_index_tilde(interval(p, w, p.top())));
            full_rhs += (A * pow(AmB, k - 1) * B - neg_y_pow(k) * (B * pow(AmB, k - 1) * A)) *
                        (YPoly{1, 1} * upper_tilde);
            tilde_rhs += pow(AmB, k - 1) * (B - neg_y_pow(k) * A) * upper_tilde;
        }
        REQUIRE(omega(ab_index(p)) == full_rhs);
        REQUIRE(omega(ab_index_tilde(p)) == tilde_rhs);
    };
    check(fixtures::poset_p());
    check(fixtures::poset_q());
    for (std::uint64_t seed = 1; seed <= 20; ++seed) check(random_graded_poset(seed, 4, 3));
}

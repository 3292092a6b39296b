#include <catch2/catch.hpp>

#include "posetcalc/poly.hpp"
#include "posetcalc/rng.hpp"

using namespace posetcalc;

TEST_CASE("canonical form trims trailing zeros") {
    YPoly p{1, 2, 0, 0};
    REQUIRE(p.degree() == 1);
    REQUIRE(p == YPoly{1, 2});
    REQUIRE(YPoly{0, 0}.is_zero());
    REQUIRE(YPoly().degree() == -1);
    REQUIRE((YPoly{1, -1} + YPoly{-1, 1}).is_zero());
}

TEST_CASE("arithmetic basics") {
    YPoly one_plus_y{1, 1};
    YPoly one_minus_y{1, -1};
    REQUIRE(one_plus_y * one_minus_y == YPoly{1, 0, -1});
    REQUIRE(pow(one_plus_y, 2) == YPoly{1, 2, 1});
    REQUIRE(one_plus_y - one_plus_y == YPoly());
    REQUIRE(-YPoly{1, -2} == YPoly{-1, 2});
    REQUIRE(YPoly{3, 1}(2) == 5);
}

TEST_CASE("geometric series is the exact (1 - v^k)/(1 - v) quotient") {
    REQUIRE(XPoly::geometric(0).is_zero());
    REQUIRE(XPoly::geometric(1) == XPoly{1});
    REQUIRE(XPoly::geometric(3) == XPoly{1, 1, 1});
    for (int k = 1; k <= 8; ++k) {
        XPoly numerator = XPoly{1} - XPoly::monomial(1, k);
        REQUIRE(exact_div(numerator, XPoly{1, -1}) == XPoly::geometric(k));
    }
}

TEST_CASE("exact division") {
    // (1 + y^3) / (1 + y) = 1 - y + y^2
    REQUIRE(exact_div(YPoly{1, 0, 0, 1}, YPoly{1, 1}) == YPoly{1, -1, 1});
    REQUIRE_THROWS_AS(exact_div(YPoly{1, 0, 1}, YPoly{1, 1}), Error);
    auto [q, r] = divmod(YPoly{1, 0, 1}, YPoly{1, 1});
    REQUIRE(q == YPoly{-1, 1});
    REQUIRE(r == YPoly{2});
    REQUIRE_THROWS_AS(exact_div(YPoly{1}, YPoly()), Error);
}

TEST_CASE("substitution into another variable") {
    YPoly p{1, 2}; // 1 + 2y
    XPoly minus_x = XPoly::monomial(-1, 1);
    REQUIRE(p.substituted(minus_x) == XPoly{1, -2});
    YPoly q{0, 0, 1}; // y^2
    REQUIRE(q.substituted(minus_x) == XPoly{0, 0, 1});
}

TEST_CASE("distributivity on random inputs") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        std::vector<long long> a, b, c;
        for (int j = 0; j <= rng.int_in(0, 4); ++j) a.push_back(rng.int_in(-5, 5));
        for (int j = 0; j <= rng.int_in(0, 4); ++j) b.push_back(rng.int_in(-5, 5));
        for (int j = 0; j <= rng.int_in(0, 4); ++j) c.push_back(rng.int_in(-5, 5));
        YPoly f(a), g(b), h(c);
        REQUIRE((f + g) * h == f * h + g * h);
    }
}

TEST_CASE("rendering in ascending powers") {
    REQUIRE(to_string(YPoly{1, 3, 2}) == "1 + 3y + 2y^2");
    REQUIRE(to_string(YPoly{1, 2, 0, -1}) == "1 + 2y - y^3");
    REQUIRE(to_string(TPoly{2, -3, 1}) == "2 - 3t + t^2");
    REQUIRE(to_string(TPoly{1, 0, -2, 1}) == "1 - 2t^2 + t^3");
    REQUIRE(to_string(XPoly{1, 5, 5, 1}) == "1 + 5x + 5x^2 + x^3");
    REQUIRE(to_string(YPoly{0, 0, 1}) == "y^2");
    REQUIRE(to_string(YPoly{-1, 0, 2}) == "-1 + 2y^2");
    REQUIRE(to_string(YPoly()) == "0");
}

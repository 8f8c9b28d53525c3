#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperjet/chern.hpp"

using namespace hyperjet;

TEST_CASE("tangent coefficients of a surface in P^3")
{
    auto g = chern_coefficient_polys(2);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == Poly::constant(Rat(1)));
    // c_1 = (4-d) h, c_2 = (d^2-4d+6) h^2
    CHECK(g[1] == Poly({Rat(4), Rat(-1)}));
    CHECK(g[2] == Poly({Rat(6), Rat(-4), Rat(1)}));
}

TEST_CASE("tangent coefficients of a curve in P^2")
{
    auto g = chern_coefficient_polys(1);
    REQUIRE(g.size() == 2);
    CHECK(g[1] == Poly({Rat(3), Rat(-1)}));   // c_1 = (3-d) h
}

TEST_CASE("classical Chern numbers of low-degree surfaces")
{
    // quintic surface: c_1^2 = 5, c_2 = 55
    CHECK(integrate_chern_monomial(2, {2, 0}, false).eval(Rat(5)) == Rat(5));
    CHECK(integrate_chern_monomial(2, {0, 1}, false).eval(Rat(5)) == Rat(55));
    // quartic surface: c_2 = 24
    CHECK(integrate_chern_monomial(2, {0, 1}, false).eval(Rat(4)) == Rat(24));
    // cubic surface: c_1^2 = 3
    CHECK(integrate_chern_monomial(2, {2, 0}, false).eval(Rat(3)) == Rat(3));
}

TEST_CASE("top self-intersection of the dual first class is d(d-n-2)^n")
{
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> tau(n, 0);
        tau[0] = n;
        Poly p = integrate_chern_monomial(n, tau, true);
        for (long d = 3; d <= 9; ++d) {
            Rat want = Rat(d) * rat_pow(Rat(d - n - 2), n);
            CHECK(p.eval(Rat(d)) == want);
        }
        CHECK(p.coeff(0) == Rat(0));
    }
}

TEST_CASE("integration requires the full weighted degree")
{
    CHECK_THROWS_AS(integrate_chern_monomial(2, {1, 0}, false), std::invalid_argument);
    CHECK_THROWS_AS(integrate_chern_monomial(2, {1, 1}, false), std::invalid_argument);
}

TEST_CASE("monomial symmetric integrals on the quintic surface")
{
    // m_(2)(a*) = (c_1*)^2 - 2 c_2*: 5 - 110 = -105
    CHECK(integrate_monomial_symmetric(2, 5, {2, 0}, true) == Rat(-105));
    // m_(1,1)(a*) = e_2(a*) = c_2*
    CHECK(integrate_monomial_symmetric(2, 5, {1, 1}, true) == Rat(55));
    // tangent side: m_(2)(a) = c_1^2 - 2 c_2 = 5 - 110
    CHECK(integrate_monomial_symmetric(2, 5, {2, 0}, false) == Rat(-105));
}

TEST_CASE("monomial to elementary expansions")
{
    auto p2 = monomial_to_elementary(2, {2, 0});
    REQUIRE(p2.size() == 2);
    CHECK(p2.at({2, 0}) == Rat(1));
    CHECK(p2.at({0, 1}) == Rat(-2));

    auto e2 = monomial_to_elementary(2, {1, 1});
    REQUIRE(e2.size() == 1);
    CHECK(e2.at({0, 1}) == Rat(1));

    auto e2b = monomial_to_elementary(3, {1, 1, 0});
    REQUIRE(e2b.size() == 1);
    CHECK(e2b.at({0, 1, 0}) == Rat(1));

    // m_(3) = p_3 = e_1^3 - 3 e_1 e_2 + 3 e_3
    auto p3 = monomial_to_elementary(3, {3, 0, 0});
    CHECK(p3.at({3, 0, 0}) == Rat(1));
    CHECK(p3.at({1, 1, 0}) == Rat(-3));
    CHECK(p3.at({0, 0, 1}) == Rat(3));
}

TEST_CASE("sign-split classes flip odd components under the dual")
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            ChernClass c = chern_class(n, k);
            CHECK(c.parity == (k % 2 == 0 ? 1 : -1));
            CHECK(Rat(c.parity) * c.magnitude.eval(Rat(7)) ==
                  chern_coefficient_polys(n)[k].eval(Rat(7)));
        }
    // curve genus line: c_1(T*_X) = (d-3) h, integral d(d-3)
    CHECK(integrate_chern_monomial(1, {1}, true).eval(Rat(4)) == Rat(4));
    CHECK(integrate_chern_monomial(1, {1}, true).eval(Rat(5)) == Rat(10));
}

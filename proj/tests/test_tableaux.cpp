#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperjet/pieri.hpp"
#include "hyperjet/ssyt.hpp"

using namespace hyperjet;

TEST_CASE("small exact tableau counts")
{
    // shape (2), entries <= 2, weight 3: only 12
    CHECK(count_ssyt({2}, 2, 3) == Int(1));
    // shape (1,1), entries <= 2, weight 2: the column 1/2 has weight 3
    CHECK(count_ssyt({1, 1}, 2, 2) == Int(0));
    CHECK(count_ssyt({1, 1}, 2, 3) == Int(1));
    CHECK(count_ssyt({}, 2, 0) == Int(1));
    CHECK(count_ssyt({}, 2, 1) == Int(0));
    CHECK(count_ssyt({3}, 1, 3) == Int(1));
    CHECK(count_ssyt({1, 1, 1}, 2, 5) == Int(0));   // column deeper than alphabet
}

TEST_CASE("counting agrees with brute-force enumeration")
{
    std::vector<Partition> shapes = {{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}};
    for (const auto& sh : shapes)
        for (int kappa = 1; kappa <= 3; ++kappa)
            for (long m = 0; m <= 10; ++m) {
                auto fills = enumerate_ssyt(sh, kappa, m);
                for (const auto& t : fills) {
                    CHECK(is_ssyt(t, kappa));
                    CHECK(t.weight() == m);
                }
                CHECK(count_ssyt(sh, kappa, m) == Int(static_cast<long>(fills.size())));
            }
}

TEST_CASE("multiplicity tables")
{
    auto t22 = multiplicity_table(2, 2, 2);
    REQUIRE(t22.size() == 2);
    CHECK(t22.at({2, 0}) == Int(1));
    CHECK(t22.at({1, 0}) == Int(1));

    auto t115 = multiplicity_table(1, 1, 5);
    REQUIRE(t115.size() == 1);
    CHECK(t115.at({5}) == Int(1));

    auto t233 = multiplicity_table(2, 3, 3);
    CHECK(t233.at({1, 1}) == Int(1));

    // map order is lex descending
    Partition prev;
    bool first = true;
    for (const auto& [sh, mult] : multiplicity_table(2, 3, 6)) {
        if (!first) CHECK(prev > sh);
        prev = sh;
        first = false;
        CHECK(mult > 0);
    }
}

TEST_CASE("weight cap guards the table")
{
    CHECK_THROWS_AS(multiplicity_table(2, 2, 100, 10), CapacityError);
    CHECK_THROWS_AS(enumerate_ssyt({20, 20}, 2, -1, 16), CapacityError);
}

TEST_CASE("hook lengths and standard counts")
{
    HookData h21 = hook_data({2, 1});
    CHECK(h21.hooks == std::vector<std::vector<long>>{{3, 1}, {1}});
    CHECK(h21.standard_count == Int(2));

    HookData h22 = hook_data({2, 2});
    CHECK(h22.hooks == std::vector<std::vector<long>>{{3, 2}, {2, 1}});
    CHECK(h22.standard_count == Int(2));

    HookData h311 = hook_data({3, 1, 1});
    CHECK(h311.standard_count == Int(6));
}

TEST_CASE("content-constrained counts")
{
    // Kostka number K_{(2,1),(1,1,1)} = 2
    CHECK(count_ssyt_content({2, 1}, {1, 1, 1}) == Int(2));
    CHECK(count_ssyt_content({2, 1}, {2, 1}) == Int(1));
    CHECK(count_ssyt_content({2, 1}, {3}) == Int(0));
}

TEST_CASE("schur functor ranks")
{
    CHECK(schur_rank({3, 1}, 2) == Int(3));
    for (int l1 = 0; l1 <= 6; ++l1) CHECK(schur_rank({l1, 0}, 2) == Int(l1 + 1));
    CHECK(schur_rank({1, 1}, 2) == Int(1));
    CHECK(schur_rank({1, 0, 0}, 3) == Int(3));
    CHECK(schur_rank({1, 1, 0}, 3) == Int(3));

    // rank equals the number of fillings with unconstrained weight
    for (const auto& sh : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
        auto fills = enumerate_ssyt(sh, 2);
        CHECK(schur_rank(sh, 2) == Int(static_cast<long>(fills.size())));
    }
}

TEST_CASE("single-row interlacing expansion")
{
    CHECK(pieri({1, 0}, 1, 2) == std::vector<Partition>{{2, 0}, {1, 1}});
    CHECK(pieri({2, 1}, 1, 2) == std::vector<Partition>{{3, 1}, {2, 2}});
    CHECK(pieri({0, 0}, 3, 2) == std::vector<Partition>{{3, 0}});
    CHECK(pieri({2, 2}, 2, 2) == std::vector<Partition>{{4, 2}});
}

TEST_CASE("symmetric tensor decompositions")
{
    auto s11 = sym_tensor_schur_decompose({1, 1}, 2);
    REQUIRE(s11.size() == 2);
    CHECK(s11.at({2, 0}) == Int(1));
    CHECK(s11.at({1, 1}) == Int(1));

    auto s111 = sym_tensor_schur_decompose({1, 1, 1}, 3);
    REQUIRE(s111.size() == 3);
    CHECK(s111.at({3, 0, 0}) == Int(1));
    CHECK(s111.at({2, 1, 0}) == Int(2));
    CHECK(s111.at({1, 1, 1}) == Int(1));

    // dimension bookkeeping: sum of rank * mult = n^k for k-fold Sym^1
    for (int n = 2; n <= 3; ++n) {
        auto dec = sym_tensor_schur_decompose({1, 1, 1}, n);
        Int total(0);
        for (const auto& [sh, mult] : dec) total += mult * schur_rank(sh, n);
        CHECK(total == int_pow(Int(n), 3));
    }
}

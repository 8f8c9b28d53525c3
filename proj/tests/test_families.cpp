#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hyperjet/asymptotics.hpp"
#include "hyperjet/families.hpp"

using namespace hyperjet;

namespace {

Tableau make_tableau(Partition shape, std::vector<std::vector<int>> rows)
{
    Tableau t;
    t.shape = std::move(shape);
    t.rows = std::move(rows);
    return t;
}

// prod over heights i of (#columns of height i)^alpha_i, 0^0 = 1
Int column_monomial(const Tableau& t, const std::vector<int>& alpha)
{
    Partition colheights = conjugate(t.shape);
    std::map<int, long> count;
    for (int h : colheights) ++count[h];
    Int prod(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        long c = count.count(static_cast<int>(i) + 1) ? count[static_cast<int>(i) + 1] : 0;
        prod *= int_pow(Int(c), alpha[i]);
    }
    return prod;
}

}  // namespace

TEST_CASE("single-box classification")
{
    Tableau t = make_tableau({1}, {{2}});
    FamilyKey key = classify_tableau(t);
    REQUIRE(key.blocks.size() == 1);
    CHECK(key.blocks[0].height == 1);
    CHECK(key.blocks[0].mu == std::vector<int>{2});
    CHECK(key.blocks[0].nu == std::vector<int>{2});
    CHECK(key.blocks[0].tau == 0);
    CHECK(distinct_column_count(key) == 1);
}

TEST_CASE("two-block classification")
{
    // columns: (1,2), (1,2), (2), (3)
    Tableau t = make_tableau({4, 2}, {{1, 1, 2, 3}, {2, 2}});
    FamilyKey key = classify_tableau(t);
    REQUIRE(key.blocks.size() == 2);
    CHECK(key.blocks[0].height == 2);
    CHECK(key.blocks[0].mu == std::vector<int>{1, 2});
    CHECK(key.blocks[0].nu == std::vector<int>{1, 2});
    CHECK(key.blocks[0].tau == 0);   // the repeated column is not distinct
    CHECK(key.blocks[1].height == 1);
    CHECK(key.blocks[1].mu == std::vector<int>{2});
    CHECK(key.blocks[1].nu == std::vector<int>{3});
    CHECK(key.blocks[1].tau == 1);
    CHECK(distinct_column_count(key) == 3);
}

TEST_CASE("distinct column bound")
{
    CHECK(distinct_column_bound(1, 3) == 3);
    CHECK(distinct_column_bound(2, 3) == 5);
    CHECK(distinct_column_bound(2, 4) == 7);
    CHECK(distinct_column_bound(3, 4) == 9);
}

TEST_CASE("entry point enumeration")
{
    CHECK(nabla_points(1, 1).size() == 1);
    CHECK(nabla_points(2, 2).size() == 1);
    CHECK(nabla_points(2, 3).size() == 2);
    CHECK(nabla_points(2, 4).size() == 3);
    CHECK(nabla_points(3, 2).empty());   // kappa < n leaves no room
    CHECK(nabla_points(3, 3).size() == 2);

    CHECK(nabla_points(3, 4).size() == 8);
    for (const auto& pt : nabla_points(3, 4)) {
        REQUIRE(pt.mu.size() == 3);
        CHECK(pt.mu[2] == std::vector<int>{1, 2, 3});
        // each block exits at the next shorter block's entry, capped by kappa
        std::vector<int> want = pt.mu[1];
        want.push_back(4);
        CHECK(pt.nu[2] == want);
        CHECK(pt.nu[0] == std::vector<int>{4});
        // weak nesting: taller entries bound the shallower ones from below
        for (int i = 1; i < 3; ++i)
            for (std::size_t l = 0; l < pt.mu[i - 1].size(); ++l)
                CHECK(pt.mu[i - 1][l] >= pt.mu[i][l]);
        CHECK(is_maximal_family(pt.key(), 3, 4));
        CHECK(distinct_column_count(pt.key()) == distinct_column_bound(3, 4));
    }
}

TEST_CASE("maximality detection")
{
    for (int n = 1; n <= 3; ++n)
        for (int kappa = n; kappa <= 4; ++kappa)
            for (const auto& pt : nabla_points(n, kappa))
                CHECK(is_maximal_family(pt.key(), n, kappa));

    // a lone box is not maximal once kappa > 1
    Tableau t = make_tableau({1}, {{1}});
    CHECK(!is_maximal_family(classify_tableau(t), 2, 2));
    CHECK(is_maximal_family(classify_tableau(t), 1, 1));
}

TEST_CASE("tight path counts and the three routes")
{
    CHECK(tight_path_count({1, 2}, {1, 2}) == Int(1));
    CHECK(tight_path_count({1, 2}, {2, 3}) == Int(1));
    CHECK(tight_path_count({1, 3}, {2, 4}) == Int(2));
    CHECK(tight_path_count({1}, {4}) == Int(1));
    CHECK(tight_path_count({2, 3}, {1, 2}) == Int(0));   // cannot go down

    std::vector<std::vector<int>> cols;
    for (int a = 1; a <= 5; ++a) {
        cols.push_back({a});
        for (int b = a + 1; b <= 6; ++b) {
            cols.push_back({a, b});
            for (int c = b + 1; c <= 6; ++c) cols.push_back({a, b, c});
        }
    }
    for (const auto& from : cols)
        for (const auto& to : cols) {
            if (from.size() != to.size()) continue;
            bool leq = true;
            for (std::size_t u = 0; u < from.size(); ++u)
                if (from[u] > to[u]) leq = false;
            if (!leq) continue;
            Int dp = tight_path_count(from, to);
            CHECK(dp == tight_path_count_dfs(from, to));
            CHECK(dp == tight_path_count_det(from, to));
            CHECK(dp <= tight_path_upper_bound(from, to));
        }
}

TEST_CASE("weighted pattern sums")
{
    CHECK(basic_numerical_sum(2, 2, 2, {1, 0}) == Int(3));
    CHECK(basic_numerical_sum(1, 1, 7, {2}) == Int(49));
    CHECK(basic_numerical_sum(1, 2, 3, {0}) == Int(2));   // plain tableau count
}

TEST_CASE("family sums agree between the point and key forms")
{
    for (int kappa = 2; kappa <= 3; ++kappa)
        for (const auto& pt : nabla_points(2, kappa))
            for (long m = 1; m <= 12; ++m)
                for (const std::vector<int>& alpha :
                     {std::vector<int>{1, 0}, std::vector<int>{2, 1}})
                    CHECK(family_sum(pt, m, alpha) == family_sum(pt.key(), m, alpha));
}

TEST_CASE("grouped decomposition reproduces the global weighted sum")
{
    for (int n = 1; n <= 2; ++n)
        for (int kappa = 1; kappa <= 3; ++kappa) {
            std::vector<std::vector<int>> alphas;
            if (n == 1) {
                alphas = {{0}, {1}, {2}};
            } else {
                alphas = {{0, 0}, {1, 0}, {2, 1}};
            }
            for (long m = 1; m <= 12; ++m) {
                auto tabs = enumerate_ssyt_weight(n, kappa, m, 64);
                auto points = nabla_points(n, kappa);
                for (const auto& alpha : alphas) {
                    Int total(0), nonmax(0);
                    std::map<FamilyKey, Int> per_family;
                    for (const auto& t : tabs) {
                        Int mono = column_monomial(t, alpha);
                        total += mono;
                        FamilyKey key = classify_tableau(t);
                        if (is_maximal_family(key, n, kappa))
                            per_family[key] += mono;
                        else
                            nonmax += mono;
                    }
                    CHECK(total == basic_numerical_sum(n, kappa, m, alpha));

                    Int grouped = nonmax;
                    for (const auto& pt : points) {
                        Int npaths(1);
                        for (std::size_t i = 0; i < pt.mu.size(); ++i)
                            npaths *= tight_path_count(pt.mu[i], pt.nu[i]);
                        Int s = family_sum(pt, m, alpha);
                        grouped += npaths * s;
                        auto it = per_family.find(pt.key());
                        Int direct = (it != per_family.end()) ? it->second : Int(0);
                        CHECK(npaths * s == direct);
                    }
                    CHECK(grouped == total);
                }
            }
        }
}

TEST_CASE("distinct columns never exceed the bound")
{
    for (int n = 1; n <= 3; ++n)
        for (int kappa = 1; kappa <= 4; ++kappa)
            for (long m = 1; m <= 8; ++m)
                for (const auto& t : enumerate_ssyt_weight(n, kappa, m, 64)) {
                    FamilyKey key = classify_tableau(t);
                    // the sharper bound with the tableau's own height
                    int h = depth(t.shape);
                    CHECK(distinct_column_count(key) <= distinct_column_bound(h, kappa));
                    CHECK(distinct_column_count(key) <= distinct_column_bound(n, kappa));
                }
}

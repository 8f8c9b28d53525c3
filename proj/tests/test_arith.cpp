#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperjet/partition.hpp"
#include "hyperjet/poly.hpp"
#include "hyperjet/rational.hpp"

using namespace hyperjet;

TEST_CASE("falling-factorial binomial at negative arguments")
{
    CHECK(binom_ff(-2, 3) == Int(-4));
    CHECK(binom_ff(-1, 3) == Int(-1));
    CHECK(binom_ff(5, 2) == Int(10));
    CHECK(binom_ff(0, 0) == Int(1));
    CHECK(binom_ff(-3, 2) == Int(6));
}

TEST_CASE("cutoff binomial vanishes outside the combinatorial range")
{
    CHECK(binom_nn(-2, 3) == Int(0));
    CHECK(binom_nn(3, 5) == Int(0));
    CHECK(binom_nn(5, 2) == Int(10));
    CHECK(binom_nn(0, 0) == Int(1));
    CHECK(binom_nn(7, 0) == Int(1));
}

TEST_CASE("the two binomials agree exactly on the common range")
{
    for (long x = 0; x <= 12; ++x)
        for (long k = 0; k <= x; ++k) CHECK(binom_ff(x, k) == binom_nn(x, k));
}

TEST_CASE("factorials and powers")
{
    CHECK(factorial(0) == Int(1));
    CHECK(factorial(5) == Int(120));
    CHECK(int_pow(Int(0), 0) == Int(1));
    CHECK(int_pow(Int(3), 4) == Int(81));
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(rat_pow(make_rat(-1, 2), 3) == make_rat(-1, 8));
}

TEST_CASE("make_rat reduces and serializes canonically")
{
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(rat_str(make_rat(2, 4)) == "1/2");
    CHECK(rat_str(make_rat(-6, 3)) == "-2");
    CHECK(rat_str(make_rat(3, -9)) == "-1/3");
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("partition helpers")
{
    CHECK(is_partition({3, 1, 0}));
    CHECK(!is_partition({1, 2}));
    CHECK(pad({2, 1}, 4) == Partition{2, 1, 0, 0});
    CHECK(pad({2, 1, 0}, 2) == Partition{2, 1});
    CHECK_THROWS_AS(pad({2, 1, 1}, 2), std::invalid_argument);
    CHECK(depth({3, 1, 0}) == 2);
    CHECK(cells({3, 1, 0}) == 4);
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({2, 2}) == Partition{2, 2});
    CHECK(partition_str({2, 1}) == "(2,1)");
}

TEST_CASE("partition enumeration is exhaustive and lex descending")
{
    std::vector<Partition> out;
    partitions_exact(2, 4, out);
    CHECK(out == std::vector<Partition>{{4, 0}, {3, 1}, {2, 2}});
    auto up = partitions_up_to(2, 2);
    CHECK(up == std::vector<Partition>{{2, 0}, {1, 1}, {1, 0}, {0, 0}});
}

TEST_CASE("polynomial ring basics")
{
    Poly p({Rat(1), Rat(1)});   // 1 + x
    CHECK(p.pow(2) == Poly({Rat(1), Rat(2), Rat(1)}));
    CHECK(p.eval(Rat(3)) == Rat(4));
    Poly q = p.compose(Poly({Rat(0), Rat(0), Rat(1)}));   // 1 + x^2
    CHECK(q == Poly({Rat(1), Rat(0), Rat(1)}));
    CHECK((p - p).is_zero());
    CHECK(Poly({Rat(0)}).is_zero());
    CHECK(p.str("x") == "1 + 1*x");
}

TEST_CASE("sampler is deterministic under a fixed seed")
{
    RatSampler a(42u, 9), b(42u, 9);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.next() == b.next());
        CHECK(a.next_int(0, 100) == b.next_int(0, 100));
    }
    RatSampler c(42u, 9);
    Rat r = c.next();
    CHECK(r != 0);
    CHECK(r.get_den() >= 1);
}

#include <doctest.h>

#include <algorithm>

#include <vector>

#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

using namespace numsg;
using V = std::vector<Int>;

TEST_CASE("two-generator semigroup construction") {
    const TwoGenSemigroup s(3, 5);
    CHECK(s.a() == 5);
    CHECK(s.b() == 3);
    CHECK(s.frobenius() == 7);
    CHECK_THROWS_AS(TwoGenSemigroup(4, 6), NotCoprime);
    CHECK_THROWS_AS(TwoGenSemigroup(0, 6), std::invalid_argument);
    CHECK_THROWS_AS(TwoGenSemigroup(1, 1), std::invalid_argument);
}

TEST_CASE("member_two_gen") {
    const TwoGenSemigroup s(5, 3);
    CHECK_FALSE(member_two_gen(s, 7));
    CHECK(member_two_gen(s, 8));
    CHECK(member_two_gen(s, 0));
    CHECK_FALSE(member_two_gen(s, -3));
    CHECK(member_two_gen(TwoGenSemigroup(9, 1), 4));
    CHECK(member_two_gen(TwoGenSemigroup(9, 1), 4, ModulusChoice::smaller));
}

TEST_CASE("modulus choice is irrelevant and both match the oracle") {
    for (Int a = 3; a <= 40; ++a) {
        for (Int b = 2; b < a; ++b) {
            if (gcd(a, b) != 1) {
                continue;
            }
            const TwoGenSemigroup s(a, b);
            const oracle::ReachTable t(oracle::GeneratorSet({a, b}), a * b);
            for (Int x = 0; x <= a * b; ++x) {
                REQUIRE(member_two_gen(s, x, ModulusChoice::larger) == t[x]);
                REQUIRE(member_two_gen(s, x, ModulusChoice::smaller) == t[x]);
            }
        }
    }
}

TEST_CASE("member_quotient") {
    const QuotientDescriptor q(TwoGenSemigroup(5, 3), 7);
    REQUIRE(q.step().has_value());
    CHECK_FALSE(member_quotient(q, 1));
    CHECK(member_quotient(q, 2));
    CHECK(member_quotient(q, 0));
}

TEST_CASE("member_quotient with a divisor sharing a factor") {
    // <5,3>/6: x in it iff 6x in <3,5>; 6 = 3+3 so everything is.
    const QuotientDescriptor q(TwoGenSemigroup(5, 3), 6);
    CHECK_FALSE(q.step().has_value());
    for (Int x = 0; x < 20; ++x) {
        CHECK(member_quotient(q, x));
    }
    const QuotientDescriptor q2(TwoGenSemigroup(7, 4), 2);
    const oracle::GeneratorSet g({4, 7});
    for (Int x = 0; x < 40; ++x) {
        CHECK(member_quotient(q2, x) == oracle::representable(g, 2 * x));
    }
    CHECK_THROWS_AS(QuotientDescriptor(TwoGenSemigroup(5, 3), 0), std::invalid_argument);
}

TEST_CASE("gaps_two_gen") {
    CHECK(gaps_two_gen(TwoGenSemigroup(3, 2)) == V{1});
    CHECK(gaps_two_gen(TwoGenSemigroup(5, 3)) == V{1, 2, 4, 7});
    CHECK(gaps_two_gen(TwoGenSemigroup(7, 2)) == V{1, 3, 5});
    CHECK(gaps_two_gen(TwoGenSemigroup(7, 1)).empty());
}

TEST_CASE("fundamental_gaps") {
    CHECK(fundamental_gaps(TwoGenSemigroup(5, 3)) == V{4, 7});
    CHECK(fundamental_gaps(TwoGenSemigroup(3, 2)) == V{1});
    // 6 = 2·3 and 9 = 7 + 2 are both in <2,7>, so 3 qualifies.
    CHECK(fundamental_gaps(TwoGenSemigroup(7, 2)) == V{3, 5});
    CHECK(fundamental_gaps(TwoGenSemigroup(7, 1)).empty());
    CHECK(is_fundamental_gap(TwoGenSemigroup(5, 3), 7));
    CHECK_FALSE(is_fundamental_gap(TwoGenSemigroup(5, 3), 2));
    CHECK_FALSE(is_fundamental_gap(TwoGenSemigroup(5, 3), 8));
}

TEST_CASE("fundamental gaps: subset of gaps and all multiples are members") {
    for (Int a = 3; a <= 30; ++a) {
        for (Int b = 2; b < a; ++b) {
            if (gcd(a, b) != 1) {
                continue;
            }
            const TwoGenSemigroup s(a, b);
            const auto gaps = gaps_two_gen(s);
            REQUIRE(gaps.back() == a * b - a - b);
            for (const Int x : fundamental_gaps(s)) {
                REQUIRE(std::ranges::binary_search(gaps, x));
                for (Int k = 2; k * x <= a * b; ++k) {
                    REQUIRE(member_two_gen(s, k * x));
                }
            }
        }
    }
}

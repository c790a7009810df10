#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "socrank/scores.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace socrank;
using testutil::coal;
using testutil::make_ranking;

namespace {

PowerRanking worked_example() {
    return make_ranking(3, {{{1}, {3}, {1, 2}}, {{2}}, {{1, 3}, {2, 3}, {1, 2, 3}, {}}});
}

ThetaVector tv(std::vector<int> counts) { return ThetaVector{std::move(counts)}; }

}  // namespace

TEST_CASE("theta vectors of the worked example") {
    const PowerRanking r = worked_example();
    CHECK(theta(r, 0).counts == std::vector<int>{2, 0, 2});
    CHECK(theta(r, 1).counts == std::vector<int>{1, 1, 2});
    CHECK(theta(r, 2).counts == std::vector<int>{1, 0, 3});
    for (int x = 0; x < 3; ++x) CHECK(theta(r, x).counts == oracles::theta_oracle(r, x));
}

TEST_CASE("theta on a single-class ranking counts everything at once") {
    const PowerRanking r = make_ranking(2, {{{}, {1}, {2}, {1, 2}}});
    CHECK(theta(r, 0).counts == std::vector<int>{2});
}

TEST_CASE("theta counts always sum to 2^(n-1)") {
    for (int n : {1, 2, 3}) {
        const int m = 1 << n;
        for_each_weak_order(m, [&](const OrderedPartition& p) {
            for (int x = 0; x < n; ++x) {
                const ThetaVector t = theta(view_of(p), x);
                int sum = 0;
                for (int c : t.counts) sum += c;
                REQUIRE(sum == (1 << (n - 1)));
            }
        });
    }
}

TEST_CASE("lexicographic comparison") {
    CHECK(lex_compare(tv({2, 0, 2}), tv({1, 1, 2})) == Ordering::greater);
    CHECK(lex_compare(tv({1, 1, 2}), tv({1, 0, 3})) == Ordering::greater);
    CHECK(lex_compare(tv({0, 0}), tv({0, 0})) == Ordering::equal);
    CHECK(lex_compare(tv({1, 0}), tv({1, 1})) == Ordering::less);
    CHECK_THROWS_AS(lex_compare(tv({1}), tv({1, 0})), LengthMismatchError);
}

TEST_CASE("dual lexicographic comparison scans from the worst class") {
    CHECK(dual_lex_compare(tv({2, 0, 2}), tv({1, 0, 3})) == Ordering::greater);
    CHECK(dual_lex_compare(tv({1, 1}), tv({1, 1})) == Ordering::equal);
    CHECK(dual_lex_compare(tv({0, 2}), tv({1, 1})) == Ordering::less);
    CHECK_THROWS_AS(dual_lex_compare(tv({1}), tv({1, 0})), LengthMismatchError);
}

TEST_CASE("both comparisons agree with the independent oracle and are total preorders") {
    std::mt19937 rng(3);
    std::vector<ThetaVector> pool;
    for (int i = 0; i < 40; ++i) {
        std::vector<int> v(4);
        for (int& x : v) x = static_cast<int>(rng() % 4);
        pool.push_back(tv(v));
    }
    for (const auto& a : pool)
        for (const auto& b : pool) {
            CHECK(dual_lex_compare(a, b) == oracles::dual_lex_oracle(a, b));
            // antisymmetry of the outcome
            const Ordering ab = lex_compare(a, b);
            const Ordering ba = lex_compare(b, a);
            CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
        }
    // transitivity of strict-greater on sampled triples
    for (int trial = 0; trial < 2000; ++trial) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        const auto& c = pool[rng() % pool.size()];
        for (auto cmp : {lex_compare, dual_lex_compare}) {
            if (cmp(a, b) == Ordering::greater && cmp(b, c) == Ordering::greater)
                CHECK(cmp(a, c) == Ordering::greater);
        }
    }
}

TEST_CASE("excellence depth") {
    SECTION("the worked example never gets past the first class") {
        const PowerRanking r = worked_example();
        for (int x = 0; x < 3; ++x) CHECK(excellence_depth(r, x).value == 0);
    }
    SECTION("nested top classes build depth") {
        const PowerRanking r = make_ranking(2, {{{1, 2}}, {{1}}, {{2}, {}}});
        CHECK(excellence_depth(r, 0).value == 2);
        CHECK(excellence_depth(r, 1).value == 1);
    }
    SECTION("empty coalition in the best class kills every depth") {
        const PowerRanking r = make_ranking(2, {{{}, {1, 2}}, {{1}, {2}}});
        CHECK(excellence_depth(r, 0).value == 0);
        CHECK(excellence_depth(r, 1).value == 0);
    }
    SECTION("agrees with the set-arithmetic oracle everywhere at n=2") {
        for_each_weak_order(4, [&](const OrderedPartition& p) {
            const PowerRanking r = ranking_from_code(Universe(2), p);
            for (int x = 0; x < 2; ++x)
                REQUIRE(excellence_depth(r, x).value == oracles::excellence_oracle(r, x));
        });
    }
    SECTION("depth at least one exactly when x is in every best-class coalition") {
        for_each_weak_order(8, [&](const OrderedPartition& p) {
            const PowerRanking r = ranking_from_code(Universe(3), p);
            const Coalition inter = family_intersection(r.classes().front());
            for (int x = 0; x < 3; ++x)
                REQUIRE((excellence_depth(r, x).value >= 1) == inter.contains(x));
        });
    }
}

TEST_CASE("exact rationals") {
    CHECK(Rational(1, 3) + Rational(1, 1) == Rational(4, 3));
    CHECK(Rational(1, 3) + Rational(1, 2) == Rational(5, 6));
    CHECK(Rational(4, 3) > Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("split scores") {
    SECTION("the grand coalition plus a singleton and a pair") {
        const PowerRanking r = make_ranking(
            3, {{{1, 2, 3}, {1}, {2, 3}}, {{}, {2}, {3}, {1, 2}, {1, 3}}});
        CHECK(split_score(r, 0).value == Rational(4, 3));
        CHECK(split_score(r, 1).value == Rational(5, 6));
        CHECK(split_score(r, 2).value == Rational(5, 6));
    }
    SECTION("grand coalition alone shares a third each") {
        const PowerRanking r = make_ranking(
            3, {{{1, 2, 3}}, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}});
        for (int x = 0; x < 3; ++x) CHECK(split_score(r, x).value == Rational(1, 3));
    }
    SECTION("empty coalition on top contributes nothing and divides by nothing") {
        const PowerRanking r =
            make_ranking(2, {{{}}, {{1}, {2}, {1, 2}}});
        for (int x = 0; x < 2; ++x) CHECK(split_score(r, x).value == Rational(0, 1));
    }
}

TEST_CASE("tie break orders") {
    const TieBreakOrder tb({2, 1, 0});
    CHECK(tb.priority(2) == 0);
    CHECK(tb.priority(0) == 2);
    CHECK(TieBreakOrder::ascending(3).priority(0) == 0);
    CHECK_THROWS_AS(TieBreakOrder({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(TieBreakOrder({0, 3}), DomainError);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "socrank/solutions.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using namespace socrank;
using testutil::make_ranking;

namespace {

PowerRanking worked_example() {
    return make_ranking(3, {{{1}, {3}, {1, 2}}, {{2}}, {{1, 3}, {2, 3}, {1, 2, 3}, {}}});
}

PowerRanking single_class(int n) {
    std::vector<Coalition> all;
    for (int mask = 0; mask < (1 << n); ++mask)
        all.push_back(Coalition{static_cast<std::uint32_t>(mask)});
    return make_power_ranking(Universe(n), {all});
}

bool code_is_canonical(const SocialCode& c) {
    if (c.num_classes < 1 || c.num_classes > c.n) return false;
    std::vector<int> count(c.num_classes, 0);
    for (int i = 0; i < c.n; ++i) {
        if (c.cls[i] >= c.num_classes) return false;
        ++count[c.cls[i]];
    }
    for (int v : count)
        if (v == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("the worked example separates the three headline rules") {
    const PowerRanking r = worked_example();
    CHECK(lex_cel(r).classes() == std::vector<std::vector<Individual>>{{0}, {1}, {2}});
    CHECK(plurality(r).classes() == std::vector<std::vector<Individual>>{{0}, {1, 2}});
    CHECK(iis(r).classes() == std::vector<std::vector<Individual>>{{0, 1, 2}});
}

TEST_CASE("dual lex-cel on the worked example, from pairwise dual comparisons") {
    const PowerRanking r = worked_example();
    const SocialRanking out = dual_lex_cel(r);
    // oracle: pairwise dual comparisons of the theta vectors
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            const Ordering o = oracles::dual_lex_oracle(theta(r, x), theta(r, y));
            CAPTURE(x, y);
            CHECK((out.class_index(x) < out.class_index(y)) == (o == Ordering::greater));
        }
    CHECK(out.classes() == std::vector<std::vector<Individual>>{{0}, {1}, {2}});
}

TEST_CASE("single-class rankings rank everyone together") {
    for (int n : {1, 2, 3}) {
        const PowerRanking r = single_class(n);
        for (const auto& rule : roster(n)) {
            if (rule.name == "plurality-tb") continue;  // strict by construction
            CAPTURE(rule.name, n);
            CHECK(rule(r).num_classes() == 1);
        }
    }
}

TEST_CASE("a lone singleton on top promotes its owner") {
    const PowerRanking r = make_ranking(2, {{{1}}, {{}, {2}, {1, 2}}});
    CHECK(lex_cel(r).classes() == std::vector<std::vector<Individual>>{{0}, {1}});
    CHECK(dual_lex_cel(r).classes() == std::vector<std::vector<Individual>>{{0}, {1}});
    CHECK(plurality(r).classes() == std::vector<std::vector<Individual>>{{0}, {1}});
}

TEST_CASE("iis ranks by nesting depth") {
    const PowerRanking r = make_ranking(2, {{{1, 2}}, {{1}}, {{2}, {}}});
    CHECK(iis(r).classes() == std::vector<std::vector<Individual>>{{0}, {1}});
}

TEST_CASE("const rule ignores its input") {
    const PowerRanking a = worked_example();
    const PowerRanking b = single_class(3);
    CHECK(const_x(a) == const_x(b));
    CHECK(const_x(a).num_classes() == 1);
}

TEST_CASE("split plurality") {
    SECTION("shares split by coalition size") {
        const PowerRanking r = make_ranking(
            3, {{{1, 2, 3}, {1}, {2, 3}}, {{}, {2}, {3}, {1, 2}, {1, 3}}});
        CHECK(split_plurality(r).classes() ==
              std::vector<std::vector<Individual>>{{0}, {1, 2}});
    }
    SECTION("empty coalition on top is harmless") {
        const PowerRanking r = make_ranking(2, {{{}}, {{1}, {2}, {1, 2}}});
        CHECK(split_plurality(r).num_classes() == 1);
    }
    SECTION("agrees with plurality when the best class holds only singletons") {
        std::mt19937 rng(17);
        FlatOrders orders = FlatOrders::enumerate(8);
        int found = 0;
        for (std::size_t i = 0; i < orders.size() && found < 200; ++i) {
            const WeakOrderView v = orders[i];
            bool singletons_only = true;
            for (int mask = 0; mask < 8 && singletons_only; ++mask)
                if (v.class_of[mask] == 0 && std::popcount((unsigned)mask) != 1)
                    singletons_only = false;
            if (!singletons_only) continue;
            ++found;
            CHECK(split_plurality_code(3, v) == plurality_code(3, v));
        }
        REQUIRE(found == 200);
    }
}

TEST_CASE("plurality with tie-breaking") {
    const PowerRanking r = worked_example();
    SECTION("the worked example with priority 3 > 2 > 1") {
        const SocialRanking out = plurality_tiebreak(r, TieBreakOrder({2, 1, 0}));
        CHECK(out.classes() == std::vector<std::vector<Individual>>{{0}, {2}, {1}});
    }
    SECTION("total indifference becomes the priority order") {
        const SocialRanking out = plurality_tiebreak(single_class(3), TieBreakOrder({0, 1, 2}));
        CHECK(out.classes() == std::vector<std::vector<Individual>>{{0}, {1}, {2}});
    }
    SECTION("nothing to break on a strict plurality order") {
        const PowerRanking s = make_ranking(2, {{{1}}, {{}, {2}, {1, 2}}});
        CHECK(plurality_tiebreak(s, TieBreakOrder({1, 0})).classes() ==
              plurality(s).classes());
    }
    SECTION("wrong-size tie break is rejected") {
        CHECK_THROWS_AS(plurality_tiebreak(r, TieBreakOrder({1, 0})), DomainError);
    }
}

TEST_CASE("every rule yields canonical weak orders and is deterministic") {
    for (int n : {2, 3}) {
        const auto rules = roster(n);
        std::mt19937 rng(23);
        FlatOrders orders = FlatOrders::enumerate(1 << n);
        for (int trial = 0; trial < 300; ++trial) {
            const WeakOrderView v = orders[rng() % orders.size()];
            for (const auto& rule : rules) {
                const SocialCode out = rule.rule(n, v);
                CAPTURE(rule.name, n);
                REQUIRE(code_is_canonical(out));
                REQUIRE(rule.rule(n, v) == out);  // same input, same output
            }
        }
    }
}

TEST_CASE("plurality-tb always produces a strict total order") {
    FlatOrders orders = FlatOrders::enumerate(4);
    const auto rules = roster(2);
    const SrsHandle* tb = find_srs(rules, "plurality-tb");
    REQUIRE(tb != nullptr);
    for (std::size_t i = 0; i < orders.size(); ++i)
        CHECK(tb->rule(2, orders[i]).num_classes == 2);
}

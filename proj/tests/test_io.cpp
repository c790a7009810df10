#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "socrank/io.hpp"

#include "test_util.hpp"

using namespace socrank;
using testutil::make_ranking;

namespace {
const std::string kExampleText = "n=3\n{1} {3} {1,2}\n{2}\n{1,3} {2,3} {1,2,3} {}\n";
}

TEST_CASE("parsing the worked example document") {
    const PowerRanking r = parse_power_ranking(kExampleText);
    CHECK(r == make_ranking(3, {{{1}, {3}, {1, 2}}, {{2}}, {{1, 3}, {2, 3}, {1, 2, 3}, {}}}));
    CHECK(r.num_classes() == 3);
}

TEST_CASE("parsing tolerates free whitespace inside lines") {
    const PowerRanking a = parse_power_ranking("n=1\n{} {1}\n");
    const PowerRanking b = parse_power_ranking("n=1\n  {  }   { 1 }  \n");
    CHECK(a == b);
    CHECK(a.num_classes() == 1);
}

TEST_CASE("partition violations surface from the constructor") {
    CHECK_THROWS_AS(parse_power_ranking("n=2\n{1}\n{1} {2} {1,2} {}\n"), PartitionError);
}

TEST_CASE("parse errors carry positions") {
    SECTION("missing header") {
        try {
            parse_ranking("x=3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.column == 1);
        }
    }
    SECTION("member out of range points at the member") {
        try {
            parse_ranking("n=2\n{1} {7}\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.column == 6);
        }
    }
    SECTION("unterminated coalition") {
        CHECK_THROWS_AS(parse_ranking("n=2\n{1,\n"), ParseError);
    }
    SECTION("duplicate member inside one coalition") {
        CHECK_THROWS_AS(parse_ranking("n=2\n{1,1} {2} {1,2} {}\n"), ParseError);
    }
    SECTION("empty document") {
        CHECK_THROWS_AS(parse_ranking("\n\n"), ParseError);
    }
    SECTION("n out of range") {
        CHECK_THROWS_AS(parse_ranking("n=0\n{}\n"), ParseError);
        CHECK_THROWS_AS(parse_ranking("n=12\n{}\n"), ParseError);
    }
}

TEST_CASE("render-parse round trip is the identity on semantics") {
    std::mt19937 rng(31);
    for (int n : {1, 2, 3}) {
        FlatOrders orders = FlatOrders::enumerate(1 << n);
        for (int trial = 0; trial < 80; ++trial) {
            const PowerRanking r =
                ranking_from_code(Universe(n), orders.owned(rng() % orders.size()));
            const std::string text = render_ranking(r);
            CHECK(parse_power_ranking(text) == r);
            // canonical text is a fixed point of render∘parse
            CHECK(render_ranking(parse_power_ranking(text)) == text);
        }
    }
}

TEST_CASE("social ranking rendering") {
    const Universe u(3);
    CHECK(render_social(make_social_ranking(u, {{0}, {1}, {2}})) == "1 > 2 > 3");
    CHECK(render_social(make_social_ranking(u, {{0}, {1, 2}})) == "1 > 2 ~ 3");
    CHECK(render_social(make_social_ranking(u, {{2, 1, 0}})) == "1 ~ 2 ~ 3");
}

TEST_CASE("tie-break parsing") {
    const TieBreakOrder tb = parse_tiebreak("3>2>1", 3);
    CHECK(tb.priority(2) == 0);
    CHECK(tb.priority(0) == 2);
    CHECK_THROWS_AS(parse_tiebreak("3>2", 3), ParseError);
    CHECK_THROWS_AS(parse_tiebreak("3>2>5", 3), ParseError);
}

TEST_CASE("verdict reports embed re-runnable rankings") {
    const auto handles = roster(2);
    const AxiomVerdict v =
        check_axiom(Axiom::si, *find_srs(handles, "iis"), Universe(2));
    REQUIRE_FALSE(v.holds);
    const json j = verdict_to_json(v, "iis");
    CHECK(j["axiom"] == "si");
    CHECK(j["outcome"] == "fails");
    CHECK(j["mode"] == "exhaustive");
    REQUIRE(j.contains("witness"));
    // the embedded documents feed straight back into the parser
    const PowerRanking base = parse_power_ranking(j["witness"]["ranking"].get<std::string>());
    CHECK(base.universe().n == 2);
    if (j["witness"].contains("ranking_after")) {
        const PowerRanking after =
            parse_power_ranking(j["witness"]["ranking_after"].get<std::string>());
        CHECK(after.universe().n == 2);
    }
}

TEST_CASE("matrix csv has seven data rows and nine bit columns") {
    Verifier verifier(2);
    const std::string csv = table3_to_csv(verifier.table3());
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "srs,NT,WIVIP,IWS,IBS,TO,SI,SSI,INUI,IIC");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& row = lines[i];
        CHECK(std::count(row.begin(), row.end(), ',') == 9);
    }
}

TEST_CASE("matrix json is schema-stable") {
    Verifier verifier(2);
    const json j = table3_to_json(verifier.table3());
    CHECK(j["n"] == 2);
    CHECK(j["matches"] == true);
    REQUIRE(j["cells"].is_array());
    REQUIRE(j["cells"].size() == 63);
    for (const auto& cell : j["cells"]) {
        CHECK(cell.contains("axiom"));
        CHECK(cell.contains("srs"));
        CHECK(cell.contains("mode"));
        CHECK(cell.contains("outcome"));
        CHECK(cell.contains("expected"));
        CHECK(cell.contains("evidence_n"));
    }
}

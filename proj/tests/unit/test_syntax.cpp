#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace aggsem;

TEST_CASE("parses an aggregate rule") {
    auto p = parse_program("p :- sum{1:p, 1:q} > 1.");
    REQUIRE(p.rules.size() == 1);
    auto const &r = p.rules[0];
    CHECK(p.universe->name(r.head) == "p");
    REQUIRE(r.body.size() == 1);
    auto const &a = std::get<AggregateAtom>(r.body[0]);
    CHECK(a.func == AggFunc::Sum);
    CHECK(a.cmp == Cmp::Gt);
    CHECK(a.bound == 1);
    REQUIRE(a.entries.size() == 2);
    CHECK(a.entries[0] == AggEntry{1, {p.universe->id("p"), false}});
    CHECK(a.entries[1] == AggEntry{1, {p.universe->id("q"), false}});
}

TEST_CASE("parses facts, literals and every aggregate keyword") {
    auto p = parse_program("p.\nq :- p, not r.\n"
                           "s :- prod{2:p} < 3, card{1:not q} <= 1, min{-1:p} >= -2, max{3:q} = 3, avg{1:p, 2:q} != 0.");
    REQUIRE(p.rules.size() == 3);
    CHECK(p.rules[0].body.empty());
    auto const &neg = std::get<Literal>(p.rules[1].body[1]);
    CHECK(neg.negated);
    CHECK(p.universe->name(neg.atom) == "r");
    std::vector<AggFunc> funcs;
    std::vector<Cmp> cmps;
    for (auto const &e : p.rules[2].body) {
        funcs.push_back(std::get<AggregateAtom>(e).func);
        cmps.push_back(std::get<AggregateAtom>(e).cmp);
    }
    CHECK(funcs == std::vector<AggFunc>{AggFunc::Prod, AggFunc::Card, AggFunc::Min, AggFunc::Max, AggFunc::Avg});
    CHECK(cmps == std::vector<Cmp>{Cmp::Lt, Cmp::Le, Cmp::Ge, Cmp::Eq, Cmp::Ne});
    CHECK(std::get<AggregateAtom>(p.rules[2].body[2]).entries[0].weight == -1);
}

TEST_CASE("universe follows first occurrence, #atoms included") {
    auto p = parse_program("#atoms z, y.\ns :- sum{1:p, -1:q} >= 0.");
    CHECK(p.universe->names() == std::vector<std::string>{"z", "y", "s", "p", "q"});
    CHECK_THROWS_AS(p.universe->id("x"), UnknownAtom);
}

TEST_CASE("comments and whitespace are ignored") {
    auto p = parse_program("% header\n  p :-   q . % trailing\n\nq.");
    CHECK(p.rules.size() == 2);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_program("p :- q not r.");
        FAIL("expected a parse error");
    } catch (ParseError const &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
        CHECK(std::string(e.what()).find("expected ',' or '.'") != std::string::npos);
    }
    try {
        parse_program("p.\nq :- .");
        FAIL("expected a parse error");
    } catch (ParseError const &e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("rejects constraints, disjunctive heads, duplicate #atoms and non-literal conditions") {
    CHECK_THROWS_AS(parse_program(":- p."), ParseError);
    CHECK_THROWS_AS(parse_program("p ; q :- r."), ParseError);
    CHECK_THROWS_AS(parse_program("p, q."), ParseError);
    CHECK_THROWS_AS(parse_program("#atoms p.\n#atoms q.\np."), ParseError);
    CHECK_THROWS_AS(parse_program("p :- sum{1:sum{1:q}>0} > 0."), ParseError);
    CHECK_THROWS_AS(parse_program("p :- sum{1:q} > 0"), ParseError);
    CHECK_THROWS_AS(parse_program("p :- foo{1:q} > 0."), ParseError);
    CHECK_THROWS_AS(parse_program("not."), ParseError);
    CHECK_THROWS_AS(parse_program("p :- sum{1:q} > 99999999999999999999."), ParseError);
}

TEST_CASE("printing round-trips") {
    std::string src = "#atoms p, q, s, x.\ns :- sum{1:p, -1:q} >= 0, not x.\nq :- card{1:s} > 0.\np.\n";
    auto p = parse_program(src);
    CHECK(to_string(p) == src);
    auto again = parse_program(to_string(p));
    CHECK(again.rules == p.rules);
    CHECK(*again.universe == *p.universe);

    auto plain = parse_program("p :- q.");
    CHECK(to_string(plain) == "p :- q.\n");
}

TEST_CASE("combine_rules_per_head groups bodies by head") {
    auto taut = testing::load("tautology.lp");
    auto c = combine_rules_per_head(taut);
    REQUIRE(c.heads.size() == 1);
    CHECK(c.heads[0].second.size() == 2);

    auto fact = combine_rules_per_head(parse_program("p."));
    REQUIRE(fact.heads.size() == 1);
    REQUIRE(fact.heads[0].second.size() == 1);
    CHECK(fact.heads[0].second[0].empty());

    auto loop = combine_rules_per_head(parse_program("p :- q. q :- p."));
    REQUIRE(loop.heads.size() == 2);
    CHECK(loop.heads[0].second.size() == 1);
    CHECK(loop.heads[1].second.size() == 1);
}

TEST_CASE("parse_interpretation") {
    auto p = parse_program("#atoms p, q, s.");
    auto i = parse_interpretation("p,q", p.universe);
    CHECK(i.to_string() == "{p,q}");
    CHECK(parse_interpretation("", p.universe).empty());
    CHECK(parse_interpretation(" q , s ", p.universe).to_string() == "{q,s}");
    CHECK_THROWS_WITH(parse_interpretation("x", p.universe), Catch::Matchers::ContainsSubstring("unknown atom"));
}

TEST_CASE("condition_atoms is sorted and unique") {
    auto p = parse_program("h :- sum{1:q, 1:p, 2:not q} > 0.");
    auto const &a = testing::first_aggregate(p);
    // ids: h = 0, q = 1, p = 2
    CHECK(condition_atoms(a) == std::vector<AtomId>{1, 2});
}

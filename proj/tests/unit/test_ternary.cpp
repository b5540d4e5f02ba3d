#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace aggsem;
using testing::first_aggregate;
using testing::pair;

namespace {
Program const p54 = testing::load("nonconvex.lp");
BodyElement const sum54 = first_aggregate(p54);

bool sat_at(SemanticsId sem, std::string const &src, std::string const &lo, std::string const &up) {
    auto p = parse_program(src);
    return sat3(sem, p.rules[0].body[0], pair(p, lo, up));
}
} // namespace

TEST_CASE("semantics names and capabilities") {
    for (auto s : kAllSemantics) CHECK(parse_semantics(to_string(s)) == s);
    CHECK_FALSE(parse_semantics("stable").has_value());
    CHECK(has_truth_function(SemanticsId::Bnd));
    CHECK_FALSE(has_truth_function(SemanticsId::Gz));
    CHECK_FALSE(is_well_behaved_claimed(SemanticsId::Mr));
    CHECK(is_well_behaved_claimed(SemanticsId::Lpst));
    CHECK_FALSE(monotone_lower_operator(SemanticsId::Flp));
    CHECK(monotone_lower_operator(SemanticsId::Mr));
}

TEST_CASE("literals are read the same way by every semantics") {
    auto p = parse_program("h :- q, not r.");
    auto q = p.rules[0].body[0];
    auto nr = p.rules[0].body[1];
    for (auto s : {SemanticsId::Gl, SemanticsId::Triv, SemanticsId::Mr, SemanticsId::Flp}) {
        CHECK(sat3(s, q, pair(p, "q", "q,r")));
        CHECK_FALSE(sat3(s, q, pair(p, "", "q")));
        CHECK(sat3(s, nr, pair(p, "", "q")));
        CHECK_FALSE(sat3(s, nr, pair(p, "", "r")));
    }
}

TEST_CASE("the non-convex SUM under each relation") {
    auto wide = pair(p54, "", "p,q,s");
    CHECK(sat3(SemanticsId::Mr, sum54, wide));
    CHECK(sat3(SemanticsId::Flp, sum54, wide));
    CHECK_FALSE(sat3(SemanticsId::Ult, sum54, wide));
    CHECK_FALSE(sat3(SemanticsId::Lpst, sum54, wide));
    CHECK_FALSE(sat3(SemanticsId::Bnd, sum54, wide));
    CHECK_FALSE(sat3(SemanticsId::Triv, sum54, wide));
    CHECK_FALSE(sat3(SemanticsId::Mr, sum54, pair(p54, "", "q")));
    CHECK_FALSE(sat3(SemanticsId::Flp, sum54, pair(p54, "", "q")));
    CHECK_FALSE(sat3(SemanticsId::Flp, sum54, pair(p54, "q", "p,q,s")));
    CHECK(sat3(SemanticsId::Mr, sum54, pair(p54, "q", "p,q,s")));
}

TEST_CASE("triv compares condition truth at both ends") {
    CHECK(sat_at(SemanticsId::Triv, "h :- sum{1:q} > 0. h :- p.", "q", "q,p"));
    CHECK_FALSE(sat_at(SemanticsId::Triv, "h :- sum{1:q} > 0.", "", "q"));
}

TEST_CASE("gz agrees with triv on positive conditions") {
    CHECK(sat_at(SemanticsId::Gz, "h :- sum{1:q, 1:p} > 0.", "q", "p,q") ==
          sat_at(SemanticsId::Triv, "h :- sum{1:q, 1:p} > 0.", "q", "p,q"));
}

TEST_CASE("gz differs from triv once a condition is negative") {
    // Upper {a,b}: only a counts and it is certain; triv sees `not b` flip between the ends.
    std::string src = "h :- sum{1:a, 1:not b} = 1.";
    CHECK(sat_at(SemanticsId::Gz, src, "a", "a,b"));
    CHECK_FALSE(sat_at(SemanticsId::Triv, src, "a", "a,b"));
    // The more precise exact pair ({a},{a}) no longer satisfies it.
    CHECK_FALSE(sat_at(SemanticsId::Gz, src, "a", "a"));
}

TEST_CASE("gl and ultimate refuse single aggregates") {
    CHECK_THROWS_AS(sat3(SemanticsId::Gl, sum54, pair(p54, "", "")), CapabilityError);
    CHECK_THROWS_AS(sat3(SemanticsId::Ultimate, sum54, pair(p54, "", "")), CapabilityError);
    CHECK_THROWS_AS(sat3(SemanticsId::Ult, sum54, pair(p54, "p", "")), InconsistentPair);
}

TEST_CASE("ultimate sees a tautology that compositional relations miss") {
    auto taut = testing::load("tautology.lp");
    auto bodies = combine_rules_per_head(taut).heads[0].second;
    auto open = pair(taut, "", "p");
    CHECK(sat3_body(SemanticsId::Ultimate, bodies, open));
    CHECK_FALSE(sat3_body(SemanticsId::Ult, bodies[0], open));
    CHECK_FALSE(sat3_body(SemanticsId::Ult, bodies[1], open));
    CHECK_FALSE(sat3_body(SemanticsId::Ult, bodies, open));
}

TEST_CASE("flp on whole bodies is two-valued truth at both ends") {
    auto p = parse_program("h :- q, sum{1:q, -1:r} >= 0.");
    auto const &body = p.rules[0].body;
    CHECK(sat3_body(SemanticsId::Flp, body, pair(p, "q", "q,r")));
    CHECK_FALSE(sat3_body(SemanticsId::Flp, body, pair(p, "", "q,r")));
}

TEST_CASE("gl on an exact pair is two-valued satisfaction") {
    auto p = parse_program("h :- q, not r.");
    CHECK(sat3_body(SemanticsId::Gl, p.rules[0].body, pair(p, "q", "q")));
}

TEST_CASE("three-valued truth") {
    auto p = parse_program("h :- sum{1:p, -1:q} >= 0, not r, sum{1:p, 1:not p} = 1.");
    auto const &b = p.rules[0].body;
    CHECK(truth3(SemanticsId::Ult, b[0], pair(p, "", "p,q")) == TruthValue::Undefined);
    CHECK(truth3(SemanticsId::Gl, b[1], pair(p, "", "r")) == TruthValue::Undefined);
    CHECK(truth3(SemanticsId::Bnd, b[2], pair(p, "", "p")) == TruthValue::True);
    CHECK(truth3(SemanticsId::Triv, b[2], pair(p, "", "p")) == TruthValue::Undefined);
    CHECK(truth3(SemanticsId::Triv, b[0], pair(p, "p", "p")) == TruthValue::True);
    CHECK(truth3_body(SemanticsId::Ult, b, pair(p, "", "p,q,r")) == TruthValue::Undefined);
    CHECK(truth3_body(SemanticsId::Ult, b, pair(p, "q", "q")) == TruthValue::False);
    CHECK_THROWS_AS(truth3(SemanticsId::Mr, b[0], pair(p, "", "")), CapabilityError);
    CHECK_THROWS_AS(truth3(SemanticsId::Gz, b[0], pair(p, "", "")), CapabilityError);
}

TEST_CASE("sat3 and the satisfiability relation derive from truth3") {
    ProgramGenerator gen(7);
    for (int k = 0; k < 100; ++k) {
        auto a = gen.aggregate(4);
        auto u = ProgramGenerator::numbered_universe(4);
        for_each_consistent_pair(4, [&](AtomSet const &x, AtomSet const &y) {
            InterpretationPair pr{Interpretation(u, x), Interpretation(u, y)};
            for (auto s : {SemanticsId::Triv, SemanticsId::Ult, SemanticsId::Bnd}) {
                auto t = truth3(s, a, pr);
                REQUIRE(sat3(s, a, pr) == (t == TruthValue::True));
                REQUIRE(satisfiable3_body(s, Body{a}, pr) == (t != TruthValue::False));
            }
        });
    }
}

TEST_CASE("every relation extends two-valued satisfaction") {
    ProgramGenerator gen(11);
    auto u = ProgramGenerator::numbered_universe(4);
    for (int k = 0; k < 200; ++k) {
        auto a = gen.aggregate(4);
        for (std::uint32_t m = 0; m < 16; ++m) {
            Interpretation x(u, AtomSet(m));
            for (auto s : {SemanticsId::Triv, SemanticsId::Gz, SemanticsId::Ult, SemanticsId::Lpst, SemanticsId::Bnd,
                           SemanticsId::Mr, SemanticsId::Flp}) {
                REQUIRE(sat3(s, a, InterpretationPair::exact(x)) == eval_aggregate(a, x));
            }
        }
    }
}

TEST_CASE("mr satisfies the weaker lower monotonicity") {
    ProgramGenerator gen(5);
    for (int k = 0; k < 100; ++k) {
        auto a = gen.aggregate(4);
        for_each_consistent_pair(4, [&](AtomSet const &x, AtomSet const &y) {
            if (!detail::sat3(SemanticsId::Mr, a, x, y)) return;
            for (std::size_t i = 0; i < 4; ++i) {
                if (!y.test(i) || x.test(i)) continue;
                AtomSet x2 = x;
                x2.set(i);
                REQUIRE(detail::sat3(SemanticsId::Mr, a, x2, y));
            }
        });
    }
}

TEST_CASE("interval relations count expansions, bound-based ones do not") {
    auto wide = pair(p54, "", "p,q,s");
    instrumentation::reset();
    sat3(SemanticsId::Bnd, sum54, wide);
    sat3(SemanticsId::Triv, sum54, wide);
    sat3(SemanticsId::Gz, sum54, wide);
    CHECK(instrumentation::interval_expansions == 0);
    sat3(SemanticsId::Ult, sum54, wide);
    CHECK(instrumentation::interval_expansions == 1);
    sat3(SemanticsId::Ult, sum54, pair(p54, "p,q", "p,q"));
    CHECK(instrumentation::interval_expansions == 1);
}

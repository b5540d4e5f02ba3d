#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace aggsem;
using testing::interp;
using testing::models;
using testing::pair;

TEST_CASE("lfp_lower") {
    auto p54 = testing::load("nonconvex.lp");
    auto top = interp(p54, "p,q,s");
    auto mr = lfp_lower_counted(SemanticsId::Mr, p54, top);
    CHECK(mr.value == top);
    CHECK(mr.iterations == 4); // s, then q, then p, then the confirming step
    CHECK(lfp_lower(SemanticsId::Ult, p54, top).empty());

    auto loop = parse_program("p :- p. p :- q. q :- p.");
    CHECK(lfp_lower(SemanticsId::Gl, loop, interp(loop, "")).empty());
    CHECK_THROWS_AS(lfp_lower(SemanticsId::Flp, p54, top), CapabilityError);
}

TEST_CASE("stable_check") {
    auto taut = testing::load("tautology.lp");
    CHECK(stable_check(SemanticsId::Ultimate, taut, interp(taut, "p")));
    for (auto s : {SemanticsId::Ult, SemanticsId::Bnd, SemanticsId::Triv}) {
        CHECK_FALSE(stable_check(s, taut, interp(taut, "")));
        CHECK_FALSE(stable_check(s, taut, interp(taut, "p")));
    }
    auto p54 = testing::load("nonconvex.lp");
    CHECK(stable_check(SemanticsId::Mr, p54, interp(p54, "p,q,s")));
    CHECK(stable_check(SemanticsId::Flp, p54, interp(p54, "p,q,s")));
    CHECK_FALSE(stable_check(SemanticsId::Ult, p54, interp(p54, "p,q,s")));
    CHECK_THROWS_AS(stable_check(SemanticsId::Gl, p54, interp(p54, "")), CapabilityError);
}

TEST_CASE("stable_enumerate") {
    CHECK(models(stable_enumerate(SemanticsId::Ult, testing::load("sum_chain.lp"))) == "{}");
    CHECK(models(stable_enumerate(SemanticsId::Gl, testing::load("sum_chain_plain.lp"))) == "{}");
    CHECK(models(stable_enumerate(SemanticsId::Bnd, testing::load("nonconvex.lp"))) == "");
    CHECK(models(stable_enumerate(SemanticsId::Gl, testing::load("choice.lp"))) == "{p} {q}");
    auto many = parse_program("#atoms a, b, c.\nb :- not a, not c.\na :- not b, not c.\nc :- not a, not b.");
    CHECK(models(stable_enumerate(SemanticsId::Gl, many)) == "{a} {b} {c}");
    CHECK_THROWS_AS(stable_enumerate(SemanticsId::Gl, many, 2), TooLarge);
}

TEST_CASE("reducts") {
    auto plain = testing::load("nonconvex_plain.lp");
    auto gl = gl_reduct(plain, interp(plain, "p,q,s"));
    CHECK(to_string(gl) == "s :- p.\nq :- s.\np :- q.\n");
    auto pos = parse_program("p :- q. q.");
    CHECK(gl_reduct(pos, interp(pos, "p")).rules == pos.rules);
    auto neg = parse_program("p :- not p.");
    CHECK(to_string(gl_reduct(neg, interp(neg, ""))) == "p.\n");
    CHECK_THROWS_AS(gl_reduct(testing::load("nonconvex.lp"), interp(testing::load("nonconvex.lp"), "")),
                    CapabilityError);

    auto g = parse_program("p :- sum{1:q} > 0.");
    CHECK(to_string(gz_reduct(g, interp(g, "p,q"))) == "p :- q.\n");
    CHECK(gz_reduct(g, interp(g, "")).rules.empty());
    auto c = parse_program("p :- card{1:q, 1:not r} >= 1.");
    CHECK(to_string(gz_reduct(c, interp(c, "q"))) == "#atoms p, q, r.\np :- q.\n");
    CHECK(gz_reduct(c, interp(c, "r")).rules.empty());

    auto p54 = testing::load("nonconvex.lp");
    CHECK(flp_reduct(p54, interp(p54, "p,q,s")).rules.size() == 3);
    CHECK(flp_reduct(neg, interp(neg, "p")).rules.empty());
    CHECK(flp_reduct(g, interp(g, "")).rules.empty());
}

TEST_CASE("GL relation matches the reduct") {
    ProgramGenerator gen(21, GeneratorParams{.aggregate_probability = 0.0});
    for (int k = 0; k < 200; ++k) {
        auto p = gen.program();
        auto n = p.universe->size();
        for_each_consistent_pair(n, [&](AtomSet const &j, AtomSet const &i) {
            Interpretation ii(p.universe, i);
            auto via_reduct = tp(gl_reduct(p, ii), Interpretation(p.universe, j));
            auto via_relation = approximator_step(SemanticsId::Gl, p, {Interpretation(p.universe, j), ii}).lower_next;
            REQUIRE(via_reduct == via_relation);
        });
    }
}

TEST_CASE("Kripke-Kleene") {
    auto choice = testing::load("choice.lp");
    CHECK(kripke_kleene(SemanticsId::Gl, choice).to_string() == "({}, {p,q})");
    for (auto s : {SemanticsId::Gl, SemanticsId::Triv, SemanticsId::Ult, SemanticsId::Bnd}) {
        CHECK(kripke_kleene(s, parse_program("p.")).to_string() == "({p}, {p})");
    }
    CHECK(kripke_kleene(SemanticsId::Ult, parse_program("p :- sum{1:p} > 0.")).to_string() == "({}, {p})");
    CHECK_THROWS_AS(kripke_kleene(SemanticsId::Mr, choice), CapabilityError);
    CHECK_THROWS_AS(kripke_kleene(SemanticsId::Ultimate, choice), CapabilityError);
}

TEST_CASE("well-founded") {
    CHECK(well_founded(SemanticsId::Gl, parse_program("p :- p.")).pair.to_string() == "({}, {})");
    CHECK(well_founded(SemanticsId::Gl, testing::load("choice.lp")).pair.to_string() == "({}, {p,q})");
    CHECK(well_founded(SemanticsId::Ult, parse_program("p :- sum{1:p} > 0.")).pair.to_string() == "({}, {})");
    auto chain = parse_program("a. b :- a. c :- not b. d :- not c, b.");
    auto wf = well_founded(SemanticsId::Gl, chain);
    CHECK(wf.pair.to_string() == "({a,b,d}, {a,b,d})");
    CHECK(wf.iterations <= 2 * chain.universe->size() + 2);
    CHECK_THROWS_AS(well_founded(SemanticsId::Flp, chain), CapabilityError);
}

TEST_CASE("ultimate operator by enumeration") {
    auto taut = testing::load("tautology.lp");
    CHECK(ultimate_operator_bruteforce(taut, pair(taut, "", "p")).to_string() == "({p}, {p})");
    auto p31 = testing::load("sum_chain.lp");
    CHECK(ultimate_operator_bruteforce(p31, pair(p31, "", "p,q")).to_string() == "({}, {p,q})");
    auto exact = pair(p31, "q", "q");
    auto t = tp(p31, exact.lower);
    CHECK(ultimate_operator_bruteforce(p31, exact) == InterpretationPair(t, t));
}

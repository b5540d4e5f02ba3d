#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace aggsem;
using testing::first_aggregate;
using testing::pair;

namespace {
Bounds bounds_of(std::string const &src, std::string const &lo, std::string const &up) {
    auto p = parse_program(src);
    return exact_bounds(first_aggregate(p), pair(p, lo, up));
}
TruthValue bnd_of(std::string const &src, std::string const &lo, std::string const &up) {
    auto p = parse_program(src);
    return bnd_truth(first_aggregate(p), pair(p, lo, up));
}
} // namespace

TEST_CASE("SUM bounds") {
    auto b = bounds_of("h :- sum{1:p, -1:q} > 0.", "", "p,q");
    CHECK(b.lb == AggValue::of(-1));
    CHECK(b.ub == AggValue::of(1));
    CHECK(b.empty_possible);
    CHECK_FALSE(b.empty_certain);
}

TEST_CASE("correlated conditions on one atom") {
    auto b = bounds_of("h :- sum{1:p, 1:not p} > 0.", "", "p");
    CHECK(b.lb == AggValue::of(1));
    CHECK(b.ub == AggValue::of(1));
    CHECK_FALSE(b.empty_possible);
}

TEST_CASE("PROD bounds follow sign flips") {
    auto b = bounds_of("h :- prod{2:p, -3:q} > 0.", "", "p,q");
    CHECK(b.lb == AggValue::of(-6));
    CHECK(b.ub == AggValue::of(2));
    CHECK(b.empty_possible);

    auto flips = bounds_of("h :- prod{-2:p, -3:q, 0:not r} > 0.", "", "p,q,r");
    CHECK(flips.lb == AggValue::of(-3));
    CHECK(flips.ub == AggValue::of(6));
}

TEST_CASE("CARD counts entries") {
    auto b = bounds_of("h :- card{7:p, -7:q, 1:not q} > 0.", "p", "p,q");
    CHECK(b.lb == AggValue::of(2));
    CHECK(b.ub == AggValue::of(2));
}

TEST_CASE("MIN/MAX/AVG bounds skip the empty multiset") {
    auto mn = bounds_of("h :- min{3:p, -1:q} > 0.", "", "p,q");
    CHECK(mn.lb == AggValue::of(-1));
    CHECK(mn.ub == AggValue::of(3));
    CHECK(mn.empty_possible);

    auto avg = bounds_of("h :- avg{1:p, 2:q} > 0.", "q", "p,q");
    CHECK(avg.lb == (AggValue{true, 3, 2}));
    CHECK(avg.ub == AggValue::of(2));

    auto none = bounds_of("h :- max{1:p} > 0.", "", "");
    CHECK_FALSE(none.lb.defined);
    CHECK(none.empty_certain);
}

TEST_CASE("exact pairs collapse the bounds") {
    auto b = bounds_of("h :- sum{1:p, 2:q, -5:not r} > 0.", "p", "p");
    CHECK(b.lb == AggValue::of(-4));
    CHECK(b.ub == AggValue::of(-4));
}

TEST_CASE("inconsistent pairs are rejected") {
    auto p = parse_program("h :- sum{1:p} > 0.");
    CHECK_THROWS_AS(exact_bounds(first_aggregate(p), pair(p, "p", "")), InconsistentPair);
}

TEST_CASE("bnd_truth") {
    CHECK(bnd_of("h :- sum{1:p, -1:q} = 2.", "", "p,q") == TruthValue::False);
    CHECK(bnd_of("h :- sum{1:p, 1:not p} = 1.", "", "p") == TruthValue::True);
    CHECK(bnd_of("h :- sum{1:p} > 0.", "p", "p") == TruthValue::True);
    CHECK(bnd_of("h :- sum{1:p, -1:q} >= 0.", "", "p,q") == TruthValue::Undefined);
    CHECK(bnd_of("h :- sum{1:p, -1:q} != 5.", "", "p,q") == TruthValue::True);
    CHECK(bnd_of("h :- sum{1:p} != 0.", "", "") == TruthValue::False);
    CHECK(bnd_of("h :- card{1:p, 1:q} <= 2.", "", "p,q") == TruthValue::True);
    CHECK(bnd_of("h :- card{1:p, 1:q} < 1.", "p", "p,q") == TruthValue::False);
    CHECK(bnd_of("h :- prod{2:p, -3:q} > 2.", "", "p,q") == TruthValue::False);
    CHECK(bnd_of("h :- prod{2:p, -3:q} < 3.", "", "p,q") == TruthValue::True);
}

TEST_CASE("bnd loses precision on SUM != when the bound falls in a gap") {
    // Interval values are {0, 3}: != 1 holds everywhere, yet LB <= 1 <= UB.
    CHECK(bnd_of("h :- sum{3:p} != 1.", "", "p") == TruthValue::Undefined);
}

TEST_CASE("bnd falls back to the interval value for MIN/MAX/AVG") {
    CHECK(bnd_of("h :- min{1:p, 2:q} >= 1.", "q", "p,q") == TruthValue::True);
    CHECK(bnd_of("h :- max{1:p} > 0.", "", "p") == TruthValue::Undefined);
}

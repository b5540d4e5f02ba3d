#ifndef AGGSEM_ANALYSIS_HPP
#define AGGSEM_ANALYSIS_HPP

#include <aggsem/ternary.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace aggsem {

//! What a relation is evaluated on: a single body element, or the disjunction
//! of all bodies of one head (the only thing `ultimate` evaluates).
using Formula = std::variant<BodyElement, DisjunctiveBody>;

inline std::string to_string(Formula const &f, Universe const &universe) {
    if (auto const *elem = std::get_if<BodyElement>(&f)) {
        return to_string(*elem, universe);
    }
    std::string out;
    for (auto const &body : std::get<DisjunctiveBody>(f)) {
        out += (out.empty() ? "(" : " | (") + to_string(body, universe) + ")";
    }
    return out.empty() ? "false" : out;
}

//! Body elements of `program` in rule order, or its per-head disjunctive bodies
//! when `disjunctive` is set.
inline std::vector<Formula> formulas_of(Program const &program, bool disjunctive) {
    std::vector<Formula> out;
    if (disjunctive) {
        for (auto &head : combine_rules_per_head(program).heads) {
            out.emplace_back(std::move(head.second));
        }
        return out;
    }
    for (auto const &rule : program.rules) {
        for (auto const &elem : rule.body) {
            out.emplace_back(elem);
        }
    }
    return out;
}

namespace detail {

inline bool sat_formula(SemanticsId sem, Formula const &f, AtomSet const &lower, AtomSet const &upper) {
    if (auto const *elem = std::get_if<BodyElement>(&f)) {
        if (sem == SemanticsId::Ultimate) {
            return interval_sat(DisjunctiveBody{Body{*elem}}, lower, upper, true);
        }
        return sat3(sem, *elem, lower, upper);
    }
    return sat3_body(sem, std::get<DisjunctiveBody>(f), lower, upper);
}

inline bool sat2_formula(Formula const &f, AtomSet const &z) {
    if (auto const *elem = std::get_if<BodyElement>(&f)) {
        return sat2(*elem, z);
    }
    return sat2_any(std::get<DisjunctiveBody>(f), z);
}

inline void require_small(std::size_t n, std::size_t max_universe) {
    if (n > max_universe) {
        throw TooLarge("universe has " + std::to_string(n) + " atoms; exhaustive analysis is limited to " +
                       std::to_string(max_universe));
    }
}

inline std::vector<AtomId> first_atoms(std::size_t n) {
    std::vector<AtomId> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<AtomId>(i);
    return out;
}

struct PairWitness {
    AtomSet weak_lower, weak_upper, strong_lower, strong_upper;
};

// First ≤p-monotonicity violation in a fixed order: weaker lower in counting
// order, weaker upper widest first; stronger lower growing from the weaker one,
// stronger upper by increasing size.
inline std::optional<PairWitness> first_monotonicity_violation(SemanticsId sem, Formula const &f, std::size_t n) {
    std::optional<PairWitness> found;
    for_each_subset(AtomSet{}, first_atoms(n), [&](AtomSet const &x) {
        auto rest = free_atoms(x, ~AtomSet{}, n);
        std::vector<AtomSet> uppers;
        for_each_subset(x, rest, [&](AtomSet const &y) {
            uppers.push_back(y);
            return true;
        });
        for (auto y = uppers.rbegin(); y != uppers.rend() && !found; ++y) {
            if (!sat_formula(sem, f, x, *y)) continue;
            for_each_subset(x, free_atoms(x, *y, n), [&](AtomSet const &x2) {
                std::vector<AtomSet> refined;
                for_each_subset(x2, free_atoms(x2, *y, n), [&](AtomSet const &y2) {
                    refined.push_back(y2);
                    return true;
                });
                std::stable_sort(refined.begin(), refined.end(),
                                 [](AtomSet const &a, AtomSet const &b) { return a.count() < b.count(); });
                for (auto const &y2 : refined) {
                    if (!sat_formula(sem, f, x2, y2)) {
                        found = PairWitness{x, *y, x2, y2};
                        return false;
                    }
                }
                return true;
            });
        }
        return !found;
    });
    return found;
}

} // namespace detail

struct WellBehavedViolation {
    enum class Kind { Extension, Monotonicity };
    Kind kind;
    InterpretationPair weaker;   //!< satisfies the formula (for Extension: the exact pair that disagrees)
    InterpretationPair stronger; //!< at least as precise, yet does not satisfy it
    std::size_t formula_index;
    std::string formula;
};

struct WellBehavedReport {
    bool holds = true;
    std::optional<WellBehavedViolation> counterexample;
};

//! Exhaustively checks, over every consistent pair of the universe, that `sem`
//! agrees with two-valued satisfaction on exact pairs and is ≤p-monotone, for
//! each formula. Reports the first violating formula.
inline WellBehavedReport check_well_behaved(SemanticsId sem, std::vector<Formula> const &formulas,
                                            UniversePtr const &universe, std::size_t max_universe) {
    std::size_t const n = universe->size();
    detail::require_small(n, max_universe);
    auto make = [&](AtomSet const &s) { return Interpretation(universe, s); };

    for (std::size_t fi = 0; fi < formulas.size(); ++fi) {
        auto const &f = formulas[fi];
        std::optional<WellBehavedViolation> bad;
        detail::for_each_subset(AtomSet{}, detail::first_atoms(n), [&](AtomSet const &x) {
            if (detail::sat_formula(sem, f, x, x) == detail::sat2_formula(f, x)) return true;
            auto exact = InterpretationPair::exact(make(x));
            bad = WellBehavedViolation{WellBehavedViolation::Kind::Extension, exact, exact, fi, to_string(f, *universe)};
            return false;
        });
        if (bad) return {false, bad};

        // Every ≤p step is a chain of single-atom refinements, so checking those suffices.
        bool violated = false;
        for_each_consistent_pair(n, [&](AtomSet const &x, AtomSet const &y) {
            if (violated || !detail::sat_formula(sem, f, x, y)) return;
            for (std::size_t a = 0; a < n && !violated; ++a) {
                if (!y.test(a) || x.test(a)) continue;
                AtomSet x2 = x;
                x2.set(a);
                AtomSet y2 = y;
                y2.reset(a);
                violated = !detail::sat_formula(sem, f, x2, y) || !detail::sat_formula(sem, f, x, y2);
            }
        });
        if (violated) {
            auto w = detail::first_monotonicity_violation(sem, f, n);
            return {false, WellBehavedViolation{WellBehavedViolation::Kind::Monotonicity,
                                                {make(w->weak_lower), make(w->weak_upper)},
                                                {make(w->strong_lower), make(w->strong_upper)}, fi,
                                                to_string(f, *universe)}};
        }
    }
    return {};
}

//! Checks every body element of `program` (every per-head disjunction for `ultimate`).
inline WellBehavedReport check_well_behaved(SemanticsId sem, Program const &program, std::size_t max_universe) {
    return check_well_behaved(sem, formulas_of(program, sem == SemanticsId::Ultimate), program.universe, max_universe);
}

enum class PrecisionOrder { Equal, ALeqB, BLeqA, Incomparable };

inline char const *to_string(PrecisionOrder order) {
    switch (order) {
    case PrecisionOrder::Equal: return "equal";
    case PrecisionOrder::ALeqB: return "A <=p B";
    case PrecisionOrder::BLeqA: return "B <=p A";
    case PrecisionOrder::Incomparable: return "incomparable";
    }
    return "?";
}

struct PrecisionWitness {
    InterpretationPair pair;
    std::size_t formula_index;
    std::string formula;
};

struct PrecisionReport {
    PrecisionOrder order = PrecisionOrder::Equal;
    std::optional<PrecisionWitness> only_a; //!< a pair and formula satisfied under A but not B
    std::optional<PrecisionWitness> only_b; //!< and the converse
};

//! A ≤p B iff every (pair, formula) satisfied under A is satisfied under B.
//! Quantifies over all consistent pairs of the universe.
inline PrecisionReport compare_precision(SemanticsId a, SemanticsId b, std::vector<Formula> const &formulas,
                                         UniversePtr const &universe, std::size_t max_universe) {
    std::size_t const n = universe->size();
    detail::require_small(n, max_universe);
    PrecisionReport report;
    for_each_consistent_pair(n, [&](AtomSet const &x, AtomSet const &y) {
        if (report.only_a && report.only_b) return;
        for (std::size_t fi = 0; fi < formulas.size(); ++fi) {
            bool sa = detail::sat_formula(a, formulas[fi], x, y);
            bool sb = detail::sat_formula(b, formulas[fi], x, y);
            auto &slot = sa ? report.only_a : report.only_b;
            if (sa != sb && !slot) {
                slot = PrecisionWitness{{Interpretation(universe, x), Interpretation(universe, y)}, fi,
                                        to_string(formulas[fi], *universe)};
            }
        }
    });
    report.order = report.only_a ? (report.only_b ? PrecisionOrder::Incomparable : PrecisionOrder::BLeqA)
                                 : (report.only_b ? PrecisionOrder::ALeqB : PrecisionOrder::Equal);
    return report;
}

//! Uses per-head disjunctions when either side is `ultimate`, body elements otherwise.
inline PrecisionReport compare_precision(SemanticsId a, SemanticsId b, Program const &program, std::size_t max_universe) {
    bool disjunctive = a == SemanticsId::Ultimate || b == SemanticsId::Ultimate;
    return compare_precision(a, b, formulas_of(program, disjunctive), program.universe, max_universe);
}

//! Largest number of distinct condition atoms is_convex accepts.
inline constexpr std::size_t kMaxConvexityAtoms = 20;

//! No X ⊆ Y ⊆ Z with X ⊨ a, Z ⊨ a and Y ⊭ a. Only condition atoms matter.
inline bool is_convex(AggregateAtom const &a) {
    auto conds = condition_atoms(a);
    std::size_t const k = conds.size();
    if (k > kMaxConvexityAtoms) {
        throw TooLarge("convexity check limited to " + std::to_string(kMaxConvexityAtoms) + " condition atoms");
    }
    std::size_t const count = std::size_t{1} << k;
    std::vector<char> sat(count);
    for (std::size_t m = 0; m < count; ++m) {
        AtomSet z;
        for (std::size_t i = 0; i < k; ++i) {
            if ((m >> i) & 1U) z.set(conds[i]);
        }
        sat[m] = detail::eval_aggregate(a, z) ? 1 : 0;
    }
    // below[m]: some subset of m satisfies; above[m]: some superset does.
    std::vector<char> below = sat;
    std::vector<char> above = sat;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t m = 0; m < count; ++m) {
            if ((m >> i) & 1U) {
                below[m] |= below[m ^ (std::size_t{1} << i)];
            } else {
                above[m] |= above[m | (std::size_t{1} << i)];
            }
        }
    }
    for (std::size_t m = 0; m < count; ++m) {
        if (!sat[m] && below[m] && above[m]) return false;
    }
    return true;
}

} // namespace aggsem

#endif

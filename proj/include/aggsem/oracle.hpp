#ifndef AGGSEM_ORACLE_HPP
#define AGGSEM_ORACLE_HPP

// Brute-force reference implementations. Each one enumerates interpretations
// directly and relies only on two-valued evaluation, so agreement with the
// main path is meaningful.

#include <aggsem/bounds.hpp>
#include <aggsem/fixpoints.hpp>
#include <aggsem/ternary.hpp>

#include <string>
#include <utility>
#include <vector>

namespace aggsem {

namespace oracle_detail {

inline constexpr std::size_t kMaxOracleFree = 20;

// Every Z with lower ⊆ Z ⊆ upper, the whole interval, no atom frozen.
inline std::vector<AtomSet> interval(AtomSet const &lower, AtomSet const &upper) {
    if (!is_subset(lower, upper)) throw InconsistentPair();
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < kMaxAtoms; ++i) {
        if (upper.test(i) && !lower.test(i)) open.push_back(i);
    }
    if (open.size() > kMaxOracleFree) {
        throw TooLarge("oracle enumeration limited to " + std::to_string(kMaxOracleFree) + " undefined atoms");
    }
    std::vector<AtomSet> out{lower};
    for (auto atom : open) {
        std::size_t const half = out.size();
        for (std::size_t k = 0; k < half; ++k) {
            out.push_back(out[k]);
            out.back().set(atom);
        }
    }
    return out;
}

inline AggValue value_at(AggregateAtom const &a, AtomSet const &z) {
    std::vector<std::int64_t> ms;
    for (auto const &e : a.entries) {
        if (z.test(e.cond.atom) != e.cond.negated) ms.push_back(e.weight);
    }
    return aggregate_value(a.func, ms);
}

inline bool holds_at(AggregateAtom const &a, AtomSet const &z) { return compare(value_at(a, z), a.cmp, a.bound); }

inline bool model_of(Program const &p, AtomSet const &i) {
    for (auto const &rule : p.rules) {
        bool body = true;
        for (auto const &elem : rule.body) {
            if (auto const *lit = std::get_if<Literal>(&elem)) {
                body = i.test(lit->atom) != lit->negated;
            } else {
                body = holds_at(std::get<AggregateAtom>(elem), i);
            }
            if (!body) break;
        }
        if (body && !i.test(rule.head)) return false;
    }
    return true;
}

} // namespace oracle_detail

//! Minimum and maximum aggregate value over every Z in the interval.
inline Bounds brute_bounds(AggregateAtom const &a, InterpretationPair const &pair) {
    Bounds b;
    b.empty_possible = false;
    b.empty_certain = true;
    for (auto const &z : oracle_detail::interval(pair.lower.bits(), pair.upper.bits())) {
        bool empty = true;
        for (auto const &e : a.entries) {
            if (z.test(e.cond.atom) != e.cond.negated) empty = false;
        }
        b.empty_possible |= empty;
        b.empty_certain &= empty;
        auto v = oracle_detail::value_at(a, z);
        if (!v.defined) continue;
        if (!b.lb.defined || compare_values(v, b.lb) < 0) b.lb = v;
        if (!b.ub.defined || compare_values(v, b.ub) > 0) b.ub = v;
    }
    return b;
}

//! Every Z in the interval satisfies `a`.
inline bool brute_sat_ult(AggregateAtom const &a, InterpretationPair const &pair) {
    for (auto const &z : oracle_detail::interval(pair.lower.bits(), pair.upper.bits())) {
        if (!oracle_detail::holds_at(a, z)) return false;
    }
    return true;
}

//! Some Z in the interval satisfies `a`.
inline bool brute_sat_ult_upper(AggregateAtom const &a, InterpretationPair const &pair) {
    for (auto const &z : oracle_detail::interval(pair.lower.bits(), pair.upper.bits())) {
        if (oracle_detail::holds_at(a, z)) return true;
    }
    return false;
}

//! i is a model of p and no proper subset of i is.
inline bool minimal_model_check(Program const &p, Interpretation const &i) {
    if (i.size() > oracle_detail::kMaxOracleFree) {
        throw TooLarge("minimal model check limited to " + std::to_string(oracle_detail::kMaxOracleFree) + " atoms");
    }
    if (!oracle_detail::model_of(p, i.bits())) return false;
    for (auto const &z : oracle_detail::interval(AtomSet{}, i.bits())) {
        if (z != i.bits() && oracle_detail::model_of(p, z)) return false;
    }
    return true;
}

struct Mismatch {
    std::string input;
    std::string main;
    std::string oracle;
};

struct VerificationReport {
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::pair<SemanticsId, std::vector<Interpretation>>> models;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

namespace oracle_detail {

inline std::string show(Bounds const &b) {
    auto v = [](AggValue const &x) {
        if (!x.defined) return std::string("undef");
        return x.den == 1 ? std::to_string(x.num) : std::to_string(x.num) + "/" + std::to_string(x.den);
    };
    return "[" + v(b.lb) + ", " + v(b.ub) + "]";
}

inline bool same_bounds(Bounds const &a, Bounds const &b) {
    return a.lb == b.lb && a.ub == b.ub && a.empty_possible == b.empty_possible && a.empty_certain == b.empty_certain;
}

// Element satisfaction under ult, computed with brute_sat_ult.
inline bool ult_body(Body const &body, InterpretationPair const &pair) {
    for (auto const &elem : body) {
        if (auto const *lit = std::get_if<Literal>(&elem)) {
            bool ok = lit->negated ? !pair.upper.contains(lit->atom) : pair.lower.contains(lit->atom);
            if (!ok) return false;
        } else if (!brute_sat_ult(std::get<AggregateAtom>(elem), pair)) {
            return false;
        }
    }
    return true;
}

// Stable under ult/lpst: supported, and the lower least fixpoint built from
// brute_sat_ult reaches y.
inline bool ult_stable(Program const &p, Interpretation const &y) {
    if (!is_supported_model(p, y)) return false;
    Interpretation x(p.universe);
    while (true) {
        Interpretation next(p.universe);
        for (auto const &rule : p.rules) {
            if (ult_body(rule.body, {x, y})) next.insert(rule.head);
        }
        if (next == x) return x == y;
        x = next;
    }
}

// Stable under ultimate: supported, and the lower least fixpoint of the
// brute-force ultimate operator reaches y.
inline bool ultimate_stable(Program const &p, Interpretation const &y) {
    if (!is_supported_model(p, y)) return false;
    Interpretation x(p.universe);
    while (true) {
        auto next = ultimate_operator_bruteforce(p, {x, y}).lower;
        if (next == x) return x == y;
        x = next;
    }
}

inline std::vector<AggregateAtom const *> aggregates_of(Program const &p) {
    std::vector<AggregateAtom const *> out;
    for (auto const &rule : p.rules) {
        for (auto const &elem : rule.body) {
            if (auto const *a = std::get_if<AggregateAtom>(&elem)) out.push_back(a);
        }
    }
    return out;
}

} // namespace oracle_detail

//! Largest universe whose consistent pairs verify_program enumerates for the per-atom checks.
inline constexpr std::size_t kMaxVerifyPairAtoms = 8;

//! Cross-checks every main-path result for `p` under `sems` against its oracle.
inline VerificationReport verify_program(Program const &p, std::vector<SemanticsId> const &sems,
                                         std::size_t max_atoms = kDefaultMaxAtoms) {
    VerificationReport report;
    auto const &u = *p.universe;
    std::size_t const n = u.size();
    auto has = [&](SemanticsId s) { return std::find(sems.begin(), sems.end(), s) != sems.end(); };
    auto note = [&](bool agree, std::string input, std::string main, std::string oracle) {
        ++report.checked;
        if (!agree) report.mismatches.push_back({std::move(input), std::move(main), std::move(oracle)});
    };
    auto tf = [](bool b) { return std::string(b ? "true" : "false"); };

    if (n <= kMaxVerifyPairAtoms) {
        auto aggs = oracle_detail::aggregates_of(p);
        for_each_consistent_pair(n, [&](AtomSet const &x, AtomSet const &y) {
            InterpretationPair pair{Interpretation(p.universe, x), Interpretation(p.universe, y)};
            for (auto const *a : aggs) {
                auto where = to_string(*a, u) + " at " + pair.to_string();
                auto main = exact_bounds(*a, pair);
                auto brute = brute_bounds(*a, pair);
                note(oracle_detail::same_bounds(main, brute), "bounds " + where, oracle_detail::show(main),
                     oracle_detail::show(brute));
                for (auto sem : {SemanticsId::Ult, SemanticsId::Lpst}) {
                    if (!has(sem)) continue;
                    bool m = sat3(sem, BodyElement{*a}, pair);
                    bool o = brute_sat_ult(*a, pair);
                    note(m == o, std::string(to_string(sem)) + " " + where, tf(m), tf(o));
                }
                if (has(SemanticsId::Ult)) {
                    bool m = satisfiable3_body(SemanticsId::Ult, Body{*a}, pair);
                    bool o = brute_sat_ult_upper(*a, pair);
                    note(m == o, "ult upper " + where, tf(m), tf(o));
                }
            }
        });
    }

    if (n > max_atoms) {
        throw TooLarge("universe has " + std::to_string(n) + " atoms; verification is limited to " +
                       std::to_string(max_atoms));
    }
    std::vector<AtomId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<AtomId>(i);

    for (auto sem : sems) {
        if (sem == SemanticsId::Gl && p.has_aggregates()) continue;
        auto models = stable_enumerate(sem, p, max_atoms);
        detail::for_each_subset(AtomSet{}, all, [&](AtomSet const &bits) {
            Interpretation y(p.universe, bits);
            bool main = std::binary_search(models.begin(), models.end(), y, lexicographic_less);
            std::optional<bool> oracle;
            switch (sem) {
            case SemanticsId::Gl: oracle = minimal_model_check(gl_reduct(p, y), y); break;
            case SemanticsId::Gz: oracle = minimal_model_check(gz_reduct(p, y), y); break;
            case SemanticsId::Flp: oracle = minimal_model_check(flp_reduct(p, y), y); break;
            case SemanticsId::Ult:
            case SemanticsId::Lpst: oracle = oracle_detail::ult_stable(p, y); break;
            case SemanticsId::Ultimate: oracle = oracle_detail::ultimate_stable(p, y); break;
            default: break;
            }
            if (oracle) {
                note(main == *oracle, std::string(to_string(sem)) + " stable " + y.to_string(), tf(main), tf(*oracle));
            }
            return true;
        });
        report.models.emplace_back(sem, std::move(models));
    }
    return report;
}

} // namespace aggsem

#endif

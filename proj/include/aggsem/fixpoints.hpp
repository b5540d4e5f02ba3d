#ifndef AGGSEM_FIXPOINTS_HPP
#define AGGSEM_FIXPOINTS_HPP

#include <aggsem/ternary.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace aggsem {

//! One application of the approximator: heads of certainly true bodies, and
//! heads of possibly true bodies.
struct ApproximatorStep {
    Interpretation lower_next;
    Interpretation upper_next;
};

struct WellFoundedResult {
    InterpretationPair pair;
    std::size_t iterations = 0; //!< alternations until stationary
};

//! Least fixpoint together with the number of operator applications it took.
struct LfpResult {
    Interpretation value;
    std::size_t iterations = 0;
};

//! Default cap on the universe size for candidate enumeration.
inline constexpr std::size_t kDefaultMaxAtoms = 20;

namespace detail {

inline void require_applicable(SemanticsId sem, Program const &p) {
    if (sem == SemanticsId::Gl && p.has_aggregates()) {
        throw CapabilityError("gl is defined for aggregate-free programs only");
    }
}

inline void require_program_universe(Program const &p, Interpretation const &i) {
    if (!same_universe(p.universe, i.universe())) {
        throw UniverseMismatch();
    }
}

inline void require_fixpoint_semantics(SemanticsId sem) {
    if (!has_truth_function(sem)) {
        throw CapabilityError(std::string("semantics '") + to_string(sem) +
                              "' has no three-valued truth function; Kripke-Kleene and well-founded fixpoints need one");
    }
}

inline AtomSet universe_bits(std::size_t n) {
    AtomSet all;
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    return all;
}

// A disjunction of bodies is satisfied iff one body is, except under `ultimate`
// where the disjunction itself is the formula. Grouping by head therefore
// serves every semantics.
inline AtomSet lower_operator(SemanticsId sem, DisjunctiveBodyProgram const &p, AtomSet const &x, AtomSet const &y) {
    AtomSet out;
    for (auto const &[head, bodies] : p.heads) {
        if (sat3_body(sem, bodies, x, y)) out.set(head);
    }
    return out;
}

inline AtomSet upper_operator(SemanticsId sem, DisjunctiveBodyProgram const &p, AtomSet const &x, AtomSet const &y) {
    AtomSet out;
    for (auto const &[head, bodies] : p.heads) {
        if (satisfiable3_body(sem, bodies, x, y)) out.set(head);
    }
    return out;
}

struct BitsLfp {
    AtomSet value;
    std::size_t iterations = 0;
};

// Kleene iteration of X ↦ lower_operator(X, y) from ∅. Iterates are kept
// inside y so every evaluated pair is consistent; for a supported y the
// operator never leaves y anyway.
inline BitsLfp lfp_lower(SemanticsId sem, DisjunctiveBodyProgram const &p, AtomSet const &y) {
    if (sem == SemanticsId::Flp) {
        throw CapabilityError("flp has no monotone lower operator; use the minimal-model check");
    }
    BitsLfp r;
    while (true) {
        ++r.iterations;
        AtomSet next = lower_operator(sem, p, r.value, y) & y;
        if (next == r.value) return r;
        r.value = next;
    }
}

// Least fixpoint of Z ↦ upper_operator(x, Z) over [x, ⊤], iterated upward from x.
inline BitsLfp lfp_upper(SemanticsId sem, DisjunctiveBodyProgram const &p, AtomSet const &x) {
    BitsLfp r{x, 0};
    while (true) {
        ++r.iterations;
        AtomSet next = upper_operator(sem, p, x, r.value) | x;
        if (next == r.value) return r;
        r.value = next;
    }
}

// y ⊨ reduct and no proper subset X of y is closed under X ↦ {H(r) | (X, y) ⊨FLP B(r)}.
inline bool flp_stable(Program const &p, AtomSet const &y, std::size_t n) {
    if (!is_model(p, y)) return false;
    auto members = free_atoms(AtomSet{}, y, n);
    auto combined = combine_rules_per_head(p);
    return for_each_subset(AtomSet{}, members, [&](AtomSet const &x) {
        if (x == y) return true;
        return !is_subset(lower_operator(SemanticsId::Flp, combined, x, y), x);
    });
}

inline bool stable_check(SemanticsId sem, Program const &p, DisjunctiveBodyProgram const &combined, AtomSet const &y) {
    if (sem == SemanticsId::Flp) {
        return flp_stable(p, y, p.universe->size());
    }
    if (tp(p, y) != y) return false;
    return lfp_lower(sem, combined, y).value == y;
}

} // namespace detail

inline ApproximatorStep approximator_step(SemanticsId sem, Program const &p, InterpretationPair const &pair) {
    detail::require_applicable(sem, p);
    detail::require_program_universe(p, pair.lower);
    auto combined = combine_rules_per_head(p);
    auto const &x = pair.lower.bits();
    auto const &y = pair.upper.bits();
    return {Interpretation(p.universe, detail::lower_operator(sem, combined, x, y)),
            Interpretation(p.universe, detail::upper_operator(sem, combined, x, y))};
}

//! Least fixpoint of X ↦ {H(r) | (X, y) ⊨ B(r)}, with the iteration count.
inline LfpResult lfp_lower_counted(SemanticsId sem, Program const &p, Interpretation const &y) {
    detail::require_applicable(sem, p);
    detail::require_program_universe(p, y);
    auto r = detail::lfp_lower(sem, combine_rules_per_head(p), y.bits());
    return {Interpretation(p.universe, r.value), r.iterations};
}

inline Interpretation lfp_lower(SemanticsId sem, Program const &p, Interpretation const &y) {
    return lfp_lower_counted(sem, p, y).value;
}

//! Whether y is a stable model under `sem`. flp uses the minimality characterization;
//! every other semantics requires a supported model that equals its lower least fixpoint.
inline bool stable_check(SemanticsId sem, Program const &p, Interpretation const &y) {
    detail::require_applicable(sem, p);
    detail::require_program_universe(p, y);
    return detail::stable_check(sem, p, combine_rules_per_head(p), y.bits());
}

//! Orders interpretations by their alphabetically sorted atom-name lists.
inline bool lexicographic_less(Interpretation const &a, Interpretation const &b) {
    return a.sorted_names() < b.sorted_names();
}

//! Every stable model, found by checking all 2^|universe| candidates.
inline std::vector<Interpretation> stable_enumerate(SemanticsId sem, Program const &p,
                                                   std::size_t max_atoms = kDefaultMaxAtoms) {
    detail::require_applicable(sem, p);
    std::size_t const n = p.universe->size();
    if (n > max_atoms) {
        throw TooLarge("universe has " + std::to_string(n) + " atoms; model enumeration is limited to " +
                       std::to_string(max_atoms));
    }
    auto combined = combine_rules_per_head(p);
    std::vector<Interpretation> out;
    std::vector<AtomId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<AtomId>(i);
    detail::for_each_subset(AtomSet{}, all, [&](AtomSet const &y) {
        if (detail::stable_check(sem, p, combined, y)) out.emplace_back(p.universe, y);
        return true;
    });
    std::sort(out.begin(), out.end(), lexicographic_less);
    return out;
}

//! Drops rules with a negative literal whose atom is in i, then all negative literals.
inline Program gl_reduct(Program const &p, Interpretation const &i) {
    detail::require_program_universe(p, i);
    if (p.has_aggregates()) {
        throw CapabilityError("the Gelfond-Lifschitz reduct is defined for aggregate-free programs only");
    }
    Program out{p.universe, {}};
    for (auto const &rule : p.rules) {
        Rule kept{rule.head, {}};
        bool blocked = false;
        for (auto const &elem : rule.body) {
            auto const &lit = std::get<Literal>(elem);
            if (!lit.negated) {
                kept.body.push_back(lit);
            } else if (i.contains(lit.atom)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.rules.push_back(std::move(kept));
    }
    return out;
}

//! Drops rules with an aggregate false in i, replaces each remaining aggregate by
//! the conjunction of its conditions true in i, then takes the GL reduct.
inline Program gz_reduct(Program const &p, Interpretation const &i) {
    detail::require_program_universe(p, i);
    Program flat{p.universe, {}};
    for (auto const &rule : p.rules) {
        Rule kept{rule.head, {}};
        bool dropped = false;
        for (auto const &elem : rule.body) {
            if (auto const *lit = std::get_if<Literal>(&elem)) {
                kept.body.push_back(*lit);
                continue;
            }
            auto const &a = std::get<AggregateAtom>(elem);
            if (!detail::eval_aggregate(a, i.bits())) {
                dropped = true;
                break;
            }
            for (auto const &e : a.entries) {
                if (detail::holds(e.cond, i.bits())) kept.body.push_back(e.cond);
            }
        }
        if (!dropped) flat.rules.push_back(std::move(kept));
    }
    return gl_reduct(flat, i);
}

//! Keeps exactly the rules whose body holds in i.
inline Program flp_reduct(Program const &p, Interpretation const &i) {
    detail::require_program_universe(p, i);
    Program out{p.universe, {}};
    for (auto const &rule : p.rules) {
        if (detail::sat2(rule.body, i.bits())) out.rules.push_back(rule);
    }
    return out;
}

//! ≤p-least fixpoint of the approximator, iterated from (∅, universe).
inline InterpretationPair kripke_kleene(SemanticsId sem, Program const &p) {
    detail::require_fixpoint_semantics(sem);
    detail::require_applicable(sem, p);
    auto combined = combine_rules_per_head(p);
    AtomSet x;
    AtomSet y = detail::universe_bits(p.universe->size());
    while (true) {
        AtomSet nx = detail::lower_operator(sem, combined, x, y);
        AtomSet ny = detail::upper_operator(sem, combined, x, y);
        if (nx == x && ny == y) break;
        x = nx;
        y = ny;
    }
    return {Interpretation(p.universe, x), Interpretation(p.universe, y)};
}

//! Alternating refinement: lower ← lfp A¹(·, upper) from ∅, upper ← lfp A²(lower, ·)
//! over [lower, ⊤], starting from (∅, universe) until stationary.
inline WellFoundedResult well_founded(SemanticsId sem, Program const &p) {
    detail::require_fixpoint_semantics(sem);
    detail::require_applicable(sem, p);
    auto combined = combine_rules_per_head(p);
    AtomSet x;
    AtomSet y = detail::universe_bits(p.universe->size());
    std::size_t iterations = 0;
    while (true) {
        ++iterations;
        AtomSet nx = detail::lfp_lower(sem, combined, y).value;
        AtomSet ny = detail::lfp_upper(sem, combined, nx).value;
        if (nx == x && ny == y) break;
        x = nx;
        y = ny;
    }
    return {{Interpretation(p.universe, x), Interpretation(p.universe, y)}, iterations};
}

//! (⋂ tp(Z), ⋃ tp(Z)) over all Z in [pair.lower, pair.upper], by plain enumeration.
inline InterpretationPair ultimate_operator_bruteforce(Program const &p, InterpretationPair const &pair) {
    detail::require_program_universe(p, pair.lower);
    auto const &x = pair.lower.bits();
    auto const &y = pair.upper.bits();
    detail::require_consistent(x, y);
    AtomSet meet = detail::universe_bits(p.universe->size());
    AtomSet join;
    detail::for_each_subset(x, detail::free_atoms(x, y, p.universe->size()), [&](AtomSet const &z) {
        AtomSet t = detail::tp(p, z);
        meet &= t;
        join |= t;
        return true;
    });
    return {Interpretation(p.universe, meet), Interpretation(p.universe, join)};
}

} // namespace aggsem

#endif

#ifndef AGGSEM_TERNARY_HPP
#define AGGSEM_TERNARY_HPP

#include <aggsem/bounds.hpp>
#include <aggsem/eval2.hpp>
#include <aggsem/interp.hpp>
#include <aggsem/truth.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace aggsem {

//! Selects a ternary satisfaction relation, and with it a stable semantics.
enum class SemanticsId { Gl, Triv, Gz, Ult, Lpst, Bnd, Mr, Flp, Ultimate };

inline constexpr std::array<SemanticsId, 9> kAllSemantics{SemanticsId::Gl,  SemanticsId::Triv, SemanticsId::Gz,
                                                          SemanticsId::Ult, SemanticsId::Lpst, SemanticsId::Bnd,
                                                          SemanticsId::Mr,  SemanticsId::Flp,  SemanticsId::Ultimate};

inline char const *to_string(SemanticsId sem) {
    switch (sem) {
    case SemanticsId::Gl: return "gl";
    case SemanticsId::Triv: return "triv";
    case SemanticsId::Gz: return "gz";
    case SemanticsId::Ult: return "ult";
    case SemanticsId::Lpst: return "lpst";
    case SemanticsId::Bnd: return "bnd";
    case SemanticsId::Mr: return "mr";
    case SemanticsId::Flp: return "flp";
    case SemanticsId::Ultimate: return "ultimate";
    }
    return "?";
}

inline std::optional<SemanticsId> parse_semantics(std::string_view name) {
    for (auto sem : kAllSemantics) {
        if (name == to_string(sem)) {
            return sem;
        }
    }
    return std::nullopt;
}

//! gl (Kleene), triv, ult and bnd come with a three-valued truth function.
inline bool has_truth_function(SemanticsId sem) {
    return sem == SemanticsId::Gl || sem == SemanticsId::Triv || sem == SemanticsId::Ult || sem == SemanticsId::Bnd;
}

//! Whether the literature claims the relation is well-behaved. mr and flp are known not to be.
inline bool is_well_behaved_claimed(SemanticsId sem) { return sem != SemanticsId::Mr && sem != SemanticsId::Flp; }

//! Whether X ↦ {H(r) | (X, Y) ⊨ B(r)} is monotone, i.e. stable models can be checked by a least fixpoint.
inline bool monotone_lower_operator(SemanticsId sem) { return sem != SemanticsId::Flp; }

namespace detail {

inline bool sat3_literal(Literal const &lit, AtomSet const &lower, AtomSet const &upper) {
    return lit.negated ? !upper.test(lit.atom) : lower.test(lit.atom);
}

inline TruthValue kleene(Literal const &lit, AtomSet const &lower, AtomSet const &upper) {
    auto v = lower.test(lit.atom) ? TruthValue::True : upper.test(lit.atom) ? TruthValue::Undefined : TruthValue::False;
    return lit.negated ? negate(v) : v;
}

inline bool all_conditions_defined(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    for (auto const &e : a.entries) {
        if (lower.test(e.cond.atom) != upper.test(e.cond.atom)) {
            return false;
        }
    }
    return true;
}

// (J, I) ⊨triv A iff I ⊨ A and J, I make the same conditions true.
inline bool sat_triv(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    for (auto const &e : a.entries) {
        if (holds(e.cond, lower) != holds(e.cond, upper)) {
            return false;
        }
    }
    return eval_aggregate(a, upper);
}

// (J, I) ⊨GZ A iff I ⊨ A and (J, I) ⊨GL ∧{c ∈ Cond(A) | I ⊨ c}.
inline bool sat_gz(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    if (!eval_aggregate(a, upper)) {
        return false;
    }
    for (auto const &e : a.entries) {
        if (holds(e.cond, upper) && !sat3_literal(e.cond, lower, upper)) {
            return false;
        }
    }
    return true;
}

// Every Z in [J, I] satisfies A; condition atoms are varied through the interval enumerator.
inline bool sat_lpst(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper, std::size_t universe_size) {
    auto conds = condition_atoms(a);
    auto free = free_atoms(lower, upper, universe_size, std::span<AtomId const>(conds));
    if (!free.empty()) {
        instrumentation::note_expansion();
    }
    return for_each_subset(lower, free, [&](AtomSet const &z) { return eval_aggregate(a, z); });
}

// I ⊨ A and some Z ⊆ J satisfies A.
inline bool sat_mr(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    if (!eval_aggregate(a, upper)) {
        return false;
    }
    std::vector<AtomId> vars;
    for (auto atom : condition_atoms(a)) {
        if (lower.test(atom)) vars.push_back(atom);
    }
    if (!vars.empty()) {
        instrumentation::note_expansion();
    }
    return !for_each_subset(AtomSet{}, vars, [&](AtomSet const &z) { return !eval_aggregate(a, z); });
}

inline std::size_t universe_extent(AtomSet const &upper) {
    std::size_t n = kMaxAtoms;
    while (n > 0 && !upper.test(n - 1)) --n;
    return n;
}

inline bool sat3(SemanticsId sem, BodyElement const &elem, AtomSet const &lower, AtomSet const &upper) {
    require_consistent(lower, upper);
    if (auto const *lit = std::get_if<Literal>(&elem)) {
        return sat3_literal(*lit, lower, upper);
    }
    auto const &a = std::get<AggregateAtom>(elem);
    switch (sem) {
    case SemanticsId::Gl: throw CapabilityError("gl is defined for aggregate-free programs only");
    case SemanticsId::Triv: return sat_triv(a, lower, upper);
    case SemanticsId::Gz: return sat_gz(a, lower, upper);
    case SemanticsId::Ult: return ult_aggregate_truth(a, lower, upper) == TruthValue::True;
    case SemanticsId::Lpst: return sat_lpst(a, lower, upper, universe_extent(upper));
    case SemanticsId::Bnd: return bnd_truth(a, lower, upper) == TruthValue::True;
    case SemanticsId::Mr: return sat_mr(a, lower, upper);
    case SemanticsId::Flp: return eval_aggregate(a, lower) && eval_aggregate(a, upper);
    case SemanticsId::Ultimate: throw CapabilityError("ultimate evaluates whole rule bodies, not single elements");
    }
    return false;
}

//! Atoms a disjunctive body mentions, ascending.
inline std::vector<AtomId> body_atoms(DisjunctiveBody const &bodies) {
    AtomSet seen;
    for (auto const &body : bodies) {
        for (auto const &elem : body) {
            if (auto const *lit = std::get_if<Literal>(&elem)) {
                seen.set(lit->atom);
            } else {
                for (auto const &e : std::get<AggregateAtom>(elem).entries) seen.set(e.cond.atom);
            }
        }
    }
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < kMaxAtoms; ++i) {
        if (seen.test(i)) out.push_back(static_cast<AtomId>(i));
    }
    return out;
}

inline bool sat2_any(DisjunctiveBody const &bodies, AtomSet const &z) {
    for (auto const &body : bodies) {
        if (sat2(body, z)) return true;
    }
    return false;
}

//! ∀Z ∈ [lower, upper]: Z ⊨ ∨bodies (universal = true) or ∃Z (universal = false).
inline bool interval_sat(DisjunctiveBody const &bodies, AtomSet const &lower, AtomSet const &upper, bool universal) {
    require_consistent(lower, upper);
    auto atoms = body_atoms(bodies);
    std::vector<AtomId> free;
    for (auto a : atoms) {
        if (upper.test(a) && !lower.test(a)) free.push_back(a);
    }
    if (!free.empty()) {
        instrumentation::note_expansion();
    }
    bool all = for_each_subset(lower, free, [&](AtomSet const &z) { return sat2_any(bodies, z) == universal; });
    return universal ? all : !all;
}

inline bool sat3_body(SemanticsId sem, Body const &body, AtomSet const &lower, AtomSet const &upper) {
    if (sem == SemanticsId::Ultimate) {
        return interval_sat(DisjunctiveBody{body}, lower, upper, true);
    }
    require_consistent(lower, upper);
    for (auto const &elem : body) {
        if (!sat3(sem, elem, lower, upper)) return false;
    }
    return true;
}

inline bool sat3_body(SemanticsId sem, DisjunctiveBody const &bodies, AtomSet const &lower, AtomSet const &upper) {
    if (sem == SemanticsId::Ultimate) {
        return interval_sat(bodies, lower, upper, true);
    }
    for (auto const &body : bodies) {
        if (sat3_body(sem, body, lower, upper)) return true;
    }
    return false;
}

inline void require_truth_function(SemanticsId sem) {
    if (!has_truth_function(sem)) {
        throw CapabilityError(std::string("semantics '") + to_string(sem) + "' has no three-valued truth function");
    }
}

inline TruthValue truth3(SemanticsId sem, BodyElement const &elem, AtomSet const &lower, AtomSet const &upper) {
    require_truth_function(sem);
    require_consistent(lower, upper);
    if (auto const *lit = std::get_if<Literal>(&elem)) {
        return kleene(*lit, lower, upper);
    }
    auto const &a = std::get<AggregateAtom>(elem);
    switch (sem) {
    case SemanticsId::Triv:
        if (!all_conditions_defined(a, lower, upper)) return TruthValue::Undefined;
        return eval_aggregate(a, upper) ? TruthValue::True : TruthValue::False;
    case SemanticsId::Ult: return ult_aggregate_truth(a, lower, upper);
    case SemanticsId::Bnd: return bnd_truth(a, lower, upper);
    default: throw CapabilityError("gl is defined for aggregate-free programs only");
    }
}

inline TruthValue truth3_body(SemanticsId sem, Body const &body, AtomSet const &lower, AtomSet const &upper) {
    require_truth_function(sem);
    auto v = TruthValue::True;
    for (auto const &elem : body) {
        v = truth_min(v, truth3(sem, elem, lower, upper));
        if (v == TruthValue::False) break;
    }
    return v;
}

//! The ternary satisfiability relation ⊨³↑: the body is possibly true.
inline bool satisfiable3_body(SemanticsId sem, Body const &body, AtomSet const &lower, AtomSet const &upper) {
    if (sem == SemanticsId::Ultimate) {
        return interval_sat(DisjunctiveBody{body}, lower, upper, false);
    }
    return truth3_body(sem, body, lower, upper) != TruthValue::False;
}

inline bool satisfiable3_body(SemanticsId sem, DisjunctiveBody const &bodies, AtomSet const &lower, AtomSet const &upper) {
    if (sem == SemanticsId::Ultimate) {
        return interval_sat(bodies, lower, upper, false);
    }
    for (auto const &body : bodies) {
        if (satisfiable3_body(sem, body, lower, upper)) return true;
    }
    return false;
}

} // namespace detail

//! (pair.lower, pair.upper) ⊨sem elem. Not defined for `ultimate` (whole bodies only)
//! nor for `gl` on aggregates.
inline bool sat3(SemanticsId sem, BodyElement const &elem, InterpretationPair const &pair) {
    return detail::sat3(sem, elem, pair.lower.bits(), pair.upper.bits());
}

//! Conjunction of sat3 over `body`; for `ultimate`, every Z in the interval satisfies the body.
inline bool sat3_body(SemanticsId sem, Body const &body, InterpretationPair const &pair) {
    return detail::sat3_body(sem, body, pair.lower.bits(), pair.upper.bits());
}

//! For `ultimate`: every Z in the interval satisfies the disjunction. Otherwise some disjunct is sat3_body.
inline bool sat3_body(SemanticsId sem, DisjunctiveBody const &bodies, InterpretationPair const &pair) {
    return detail::sat3_body(sem, bodies, pair.lower.bits(), pair.upper.bits());
}

inline TruthValue truth3(SemanticsId sem, BodyElement const &elem, InterpretationPair const &pair) {
    return detail::truth3(sem, elem, pair.lower.bits(), pair.upper.bits());
}

//! Kleene conjunction of element truth values.
inline TruthValue truth3_body(SemanticsId sem, Body const &body, InterpretationPair const &pair) {
    return detail::truth3_body(sem, body, pair.lower.bits(), pair.upper.bits());
}

inline bool satisfiable3_body(SemanticsId sem, Body const &body, InterpretationPair const &pair) {
    return detail::satisfiable3_body(sem, body, pair.lower.bits(), pair.upper.bits());
}

} // namespace aggsem

#endif

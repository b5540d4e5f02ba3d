#ifndef AGGSEM_BOUNDS_HPP
#define AGGSEM_BOUNDS_HPP

#include <aggsem/eval2.hpp>
#include <aggsem/interp.hpp>
#include <aggsem/truth.hpp>

#include <algorithm>
#include <vector>

namespace aggsem {

//! Exact extrema of an aggregate's value over all Z in an interval [X, Y].
//!
//! `lb`/`ub` range over the Z where the value is defined; both are undefined
//! only if no Z yields a defined value (MIN/MAX/AVG on a certainly empty multiset).
struct Bounds {
    AggValue lb;
    AggValue ub;
    bool empty_possible = false; //!< some Z yields the empty multiset
    bool empty_certain = false;  //!< every Z yields the empty multiset

    friend bool operator==(Bounds const &, Bounds const &) = default;
};

namespace detail {

enum class AtomState { True, False, Undefined };

//! Entries sharing a condition atom, split by the branch that selects them.
struct ConditionGroup {
    AtomId atom;
    AtomState state;
    std::vector<std::int64_t> if_true;  //!< weights of entries `w:atom`
    std::vector<std::int64_t> if_false; //!< weights of entries `w:not atom`
};

inline std::vector<ConditionGroup> group_conditions(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    std::vector<ConditionGroup> groups;
    for (auto atom : condition_atoms(a)) {
        AtomState state = lower.test(atom) ? AtomState::True : upper.test(atom) ? AtomState::Undefined : AtomState::False;
        groups.push_back({atom, state, {}, {}});
    }
    for (auto const &e : a.entries) {
        auto it = std::lower_bound(groups.begin(), groups.end(), e.cond.atom,
                                   [](ConditionGroup const &g, AtomId x) { return g.atom < x; });
        (e.cond.negated ? it->if_false : it->if_true).push_back(e.weight);
    }
    return groups;
}

inline void require_consistent(AtomSet const &lower, AtomSet const &upper) {
    if (!is_subset(lower, upper)) {
        throw InconsistentPair();
    }
}

inline std::int64_t branch_sum(std::vector<std::int64_t> const &ws, bool unit) {
    if (unit) {
        return static_cast<std::int64_t>(ws.size());
    }
    std::int64_t s = 0;
    for (auto w : ws) s = checked_add(s, w);
    return s;
}

inline std::int64_t branch_product(std::vector<std::int64_t> const &ws) {
    std::int64_t p = 1;
    for (auto w : ws) p = checked_mul(p, w);
    return p;
}

inline Bounds exact_bounds(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    require_consistent(lower, upper);
    auto groups = group_conditions(a, lower, upper);

    Bounds b;
    b.empty_possible = true;
    b.empty_certain = true;
    for (auto const &g : groups) {
        switch (g.state) {
        case AtomState::True:
            b.empty_possible &= g.if_true.empty();
            b.empty_certain &= g.if_true.empty();
            break;
        case AtomState::False:
            b.empty_possible &= g.if_false.empty();
            b.empty_certain &= g.if_false.empty();
            break;
        case AtomState::Undefined:
            b.empty_possible &= g.if_true.empty() || g.if_false.empty();
            b.empty_certain = false;
            break;
        }
    }

    switch (a.func) {
    case AggFunc::Sum:
    case AggFunc::Card: {
        // Groups are independent and the total is additive, so each undefined
        // atom contributes its cheaper (dearer) branch to the lower (upper) bound.
        bool unit = a.func == AggFunc::Card;
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        for (auto const &g : groups) {
            auto t = branch_sum(g.if_true, unit);
            auto f = branch_sum(g.if_false, unit);
            switch (g.state) {
            case AtomState::True: lo = checked_add(lo, t); hi = checked_add(hi, t); break;
            case AtomState::False: lo = checked_add(lo, f); hi = checked_add(hi, f); break;
            case AtomState::Undefined:
                lo = checked_add(lo, std::min(t, f));
                hi = checked_add(hi, std::max(t, f));
                break;
            }
        }
        b.lb = AggValue::of(lo);
        b.ub = AggValue::of(hi);
        return b;
    }
    case AggFunc::Prod: {
        // Multiplying by a constant is monotone or antitone, so the extrema of
        // the running product only ever come from the previous extrema.
        std::int64_t lo = 1;
        std::int64_t hi = 1;
        for (auto const &g : groups) {
            std::vector<std::int64_t> choices;
            if (g.state != AtomState::False) choices.push_back(branch_product(g.if_true));
            if (g.state != AtomState::True) choices.push_back(branch_product(g.if_false));
            std::int64_t nlo = 0;
            std::int64_t nhi = 0;
            bool first = true;
            for (auto c : choices) {
                for (auto v : {checked_mul(lo, c), checked_mul(hi, c)}) {
                    nlo = first ? v : std::min(nlo, v);
                    nhi = first ? v : std::max(nhi, v);
                    first = false;
                }
            }
            lo = nlo;
            hi = nhi;
        }
        b.lb = AggValue::of(lo);
        b.ub = AggValue::of(hi);
        return b;
    }
    case AggFunc::Min:
    case AggFunc::Max:
    case AggFunc::Avg: {
        // Exponential in the undefined condition atoms.
        std::vector<std::int64_t> fixed;
        std::vector<ConditionGroup const *> open;
        for (auto const &g : groups) {
            if (g.state == AtomState::True) fixed.insert(fixed.end(), g.if_true.begin(), g.if_true.end());
            else if (g.state == AtomState::False) fixed.insert(fixed.end(), g.if_false.begin(), g.if_false.end());
            else open.push_back(&g);
        }
        if (open.size() > kMaxFreeAtoms) {
            throw TooLarge("too many undefined condition atoms for exact bounds");
        }
        instrumentation::note_expansion();
        std::vector<std::int64_t> ms;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
            ms = fixed;
            for (std::size_t k = 0; k < open.size(); ++k) {
                auto const &branch = ((mask >> k) & 1U) ? open[k]->if_true : open[k]->if_false;
                ms.insert(ms.end(), branch.begin(), branch.end());
            }
            auto v = aggregate_value(a.func, ms);
            if (!v.defined) {
                continue;
            }
            if (!b.lb.defined || compare_values(v, b.lb) < 0) b.lb = v;
            if (!b.ub.defined || compare_values(v, b.ub) > 0) b.ub = v;
        }
        return b;
    }
    }
    return b;
}

//! t if every Z in [lower, upper] satisfies `a`, f if none does, u otherwise.
//! Only condition atoms vary; the rest cannot change the aggregate's value.
inline TruthValue ult_aggregate_truth(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    require_consistent(lower, upper);
    AtomSet free;
    for (auto const &e : a.entries) {
        if (upper.test(e.cond.atom) && !lower.test(e.cond.atom)) {
            free.set(e.cond.atom);
        }
    }
    std::vector<AtomId> vars;
    for (auto atom : condition_atoms(a)) {
        if (free.test(atom)) vars.push_back(atom);
    }
    if (!vars.empty()) {
        instrumentation::note_expansion();
    }
    if (vars.size() > kMaxFreeAtoms) {
        throw TooLarge("too many undefined condition atoms");
    }
    bool some_true = false;
    bool some_false = false;
    std::uint64_t const count = std::uint64_t{1} << vars.size();
    for (std::uint64_t mask = 0; mask < count && !(some_true && some_false); ++mask) {
        AtomSet z = lower;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if ((mask >> k) & 1U) z.set(vars[k]);
        }
        (eval_aggregate(a, z) ? some_true : some_false) = true;
    }
    if (some_true && some_false) return TruthValue::Undefined;
    return some_true ? TruthValue::True : TruthValue::False;
}

inline TruthValue bnd_truth(AggregateAtom const &a, AtomSet const &lower, AtomSet const &upper) {
    if (a.func == AggFunc::Min || a.func == AggFunc::Max || a.func == AggFunc::Avg) {
        return ult_aggregate_truth(a, lower, upper);
    }
    auto b = exact_bounds(a, lower, upper);
    auto const lo = b.lb.num; // SUM, CARD and PROD are always defined with den == 1
    auto const hi = b.ub.num;
    auto const w = a.bound;
    auto pick = [](bool t, bool f) { return t ? TruthValue::True : f ? TruthValue::False : TruthValue::Undefined; };
    switch (a.cmp) {
    case Cmp::Eq: return pick(lo == w && hi == w, lo > w || hi < w);
    case Cmp::Ne: return pick(lo > w || hi < w, lo == w && hi == w);
    case Cmp::Ge: return pick(lo >= w, hi < w);
    case Cmp::Gt: return pick(lo > w, hi <= w);
    case Cmp::Le: return pick(hi <= w, lo > w);
    case Cmp::Lt: return pick(hi < w, lo >= w);
    }
    return TruthValue::Undefined;
}

} // namespace detail

//! Exact minimum and maximum of the aggregate value over [pair.lower, pair.upper].
//! Polynomial for SUM, CARD and PROD; MIN, MAX and AVG enumerate branch combinations.
inline Bounds exact_bounds(AggregateAtom const &a, InterpretationPair const &pair) {
    return detail::exact_bounds(a, pair.lower.bits(), pair.upper.bits());
}

//! Bound-approximating truth value. SUM/CARD/PROD are decided from exact_bounds;
//! MIN/MAX/AVG use the ultimate truth value.
inline TruthValue bnd_truth(AggregateAtom const &a, InterpretationPair const &pair) {
    return detail::bnd_truth(a, pair.lower.bits(), pair.upper.bits());
}

} // namespace aggsem

#endif

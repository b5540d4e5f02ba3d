#ifndef AGGSEM_EVAL2_HPP
#define AGGSEM_EVAL2_HPP

#include <aggsem/interp.hpp>
#include <aggsem/syntax.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace aggsem {

// Checked 64-bit arithmetic; aggregate evaluation never wraps silently.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticOverflow();
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticOverflow();
    }
    return r;
}

//! Value of an aggregate function: a rational num/den (den > 0), or undefined
//! for MIN/MAX/AVG of the empty multiset.
struct AggValue {
    bool defined = false;
    std::int64_t num = 0;
    std::int64_t den = 1;

    static AggValue of(std::int64_t v) { return {true, v, 1}; }
    static AggValue undefined() { return {}; }

    friend bool operator==(AggValue const &a, AggValue const &b) {
        if (a.defined != b.defined) {
            return false;
        }
        return !a.defined || static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

//! Orders two defined values.
inline std::strong_ordering compare_values(AggValue const &a, AggValue const &b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
}

//! `value cmp bound`; an undefined value satisfies no comparison.
inline bool compare(AggValue const &value, Cmp cmp, std::int64_t bound) {
    if (!value.defined) {
        return false;
    }
    auto order = compare_values(value, AggValue::of(bound));
    switch (cmp) {
    case Cmp::Lt: return order < 0;
    case Cmp::Le: return order <= 0;
    case Cmp::Gt: return order > 0;
    case Cmp::Ge: return order >= 0;
    case Cmp::Eq: return order == 0;
    case Cmp::Ne: return order != 0;
    }
    return false;
}

//! Applies `func` to a multiset of weights. SUM, CARD and PROD of the empty
//! multiset are 0, 0 and 1; MIN, MAX and AVG of it are undefined.
inline AggValue aggregate_value(AggFunc func, std::span<std::int64_t const> ms) {
    switch (func) {
    case AggFunc::Sum: {
        std::int64_t s = 0;
        for (auto w : ms) s = checked_add(s, w);
        return AggValue::of(s);
    }
    case AggFunc::Prod: {
        std::int64_t p = 1;
        for (auto w : ms) p = checked_mul(p, w);
        return AggValue::of(p);
    }
    case AggFunc::Card: return AggValue::of(static_cast<std::int64_t>(ms.size()));
    case AggFunc::Min:
    case AggFunc::Max: {
        if (ms.empty()) {
            return AggValue::undefined();
        }
        auto v = ms[0];
        for (auto w : ms) v = func == AggFunc::Min ? std::min(v, w) : std::max(v, w);
        return AggValue::of(v);
    }
    case AggFunc::Avg: {
        if (ms.empty()) {
            return AggValue::undefined();
        }
        std::int64_t s = 0;
        for (auto w : ms) s = checked_add(s, w);
        return {true, s, static_cast<std::int64_t>(ms.size())};
    }
    }
    return AggValue::undefined();
}

namespace detail {

inline bool holds(Literal const &lit, AtomSet const &i) { return i.test(lit.atom) != lit.negated; }

inline std::vector<std::int64_t> multiset(std::span<AggEntry const> entries, AtomSet const &i) {
    std::vector<std::int64_t> out;
    for (auto const &e : entries) {
        if (holds(e.cond, i)) {
            out.push_back(e.weight);
        }
    }
    return out;
}

// Same result as aggregate_value over multiset(), folded without allocating.
inline bool eval_aggregate(AggregateAtom const &a, AtomSet const &i) {
    std::int64_t acc = a.func == AggFunc::Prod ? 1 : 0;
    std::int64_t count = 0;
    for (auto const &e : a.entries) {
        if (!holds(e.cond, i)) continue;
        switch (a.func) {
        case AggFunc::Sum:
        case AggFunc::Avg: acc = checked_add(acc, e.weight); break;
        case AggFunc::Prod: acc = checked_mul(acc, e.weight); break;
        case AggFunc::Card: break;
        case AggFunc::Min: acc = count == 0 ? e.weight : std::min(acc, e.weight); break;
        case AggFunc::Max: acc = count == 0 ? e.weight : std::max(acc, e.weight); break;
        }
        ++count;
    }
    AggValue v;
    switch (a.func) {
    case AggFunc::Sum:
    case AggFunc::Prod: v = AggValue::of(acc); break;
    case AggFunc::Card: v = AggValue::of(count); break;
    case AggFunc::Min:
    case AggFunc::Max: v = count == 0 ? AggValue::undefined() : AggValue::of(acc); break;
    case AggFunc::Avg: v = count == 0 ? AggValue::undefined() : AggValue{true, acc, count}; break;
    }
    return compare(v, a.cmp, a.bound);
}

inline bool sat2(BodyElement const &elem, AtomSet const &i) {
    if (auto const *lit = std::get_if<Literal>(&elem)) {
        return holds(*lit, i);
    }
    return eval_aggregate(std::get<AggregateAtom>(elem), i);
}

inline bool sat2(Body const &body, AtomSet const &i) {
    for (auto const &elem : body) {
        if (!sat2(elem, i)) {
            return false;
        }
    }
    return true;
}

inline AtomSet tp(Program const &p, AtomSet const &i) {
    AtomSet out;
    for (auto const &rule : p.rules) {
        if (!out.test(rule.head) && sat2(rule.body, i)) {
            out.set(rule.head);
        }
    }
    return out;
}

inline bool is_model(Program const &p, AtomSet const &i) {
    for (auto const &rule : p.rules) {
        if (!i.test(rule.head) && sat2(rule.body, i)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

//! The multiset [w | cond holds in i] in entry order.
inline std::vector<std::int64_t> eval_multiset(std::span<AggEntry const> entries, Interpretation const &i) {
    return detail::multiset(entries, i.bits());
}

inline bool eval_aggregate(AggregateAtom const &a, Interpretation const &i) { return detail::eval_aggregate(a, i.bits()); }

inline bool sat2(Body const &body, Interpretation const &i) { return detail::sat2(body, i.bits()); }
inline bool sat2(BodyElement const &elem, Interpretation const &i) { return detail::sat2(elem, i.bits()); }

//! Two-valued immediate consequence operator.
inline Interpretation tp(Program const &p, Interpretation const &i) {
    if (!same_universe(p.universe, i.universe())) {
        throw UniverseMismatch();
    }
    return Interpretation(p.universe, detail::tp(p, i.bits()));
}

inline bool is_model(Program const &p, Interpretation const &i) {
    if (!same_universe(p.universe, i.universe())) {
        throw UniverseMismatch();
    }
    return detail::is_model(p, i.bits());
}

inline bool is_supported_model(Program const &p, Interpretation const &i) { return tp(p, i) == i; }

} // namespace aggsem

#endif

#ifndef AGGSEM_INTERP_HPP
#define AGGSEM_INTERP_HPP

#include <aggsem/syntax.hpp>

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aggsem {

using AtomSet = std::bitset<kMaxAtoms>;

//! Largest number of free atoms any interval enumeration will expand (2^30 members).
inline constexpr std::size_t kMaxFreeAtoms = 30;

//! Counts how often satisfaction checks expand an interval of interpretations
//! (or an equivalent set of branch combinations). Per thread.
namespace instrumentation {
inline thread_local std::uint64_t interval_expansions = 0;
inline void note_expansion() { ++interval_expansions; }
inline void reset() { interval_expansions = 0; }
} // namespace instrumentation

//! A two-valued interpretation: the set of true atoms over a fixed universe.
class Interpretation {
public:
    Interpretation() : universe_(std::make_shared<Universe const>()) {}
    explicit Interpretation(UniversePtr universe, AtomSet atoms = {})
        : universe_(std::move(universe))
        , atoms_(atoms) {}

    //! The whole universe, i.e. the top element.
    static Interpretation full(UniversePtr const &universe) {
        AtomSet all;
        for (std::size_t i = 0; i < universe->size(); ++i) {
            all.set(i);
        }
        return Interpretation(universe, all);
    }

    [[nodiscard]] bool contains(AtomId atom) const { return atoms_.test(atom); }
    void insert(AtomId atom) { atoms_.set(atom); }
    void erase(AtomId atom) { atoms_.reset(atom); }
    [[nodiscard]] std::size_t size() const { return atoms_.count(); }
    [[nodiscard]] bool empty() const { return atoms_.none(); }

    [[nodiscard]] AtomSet const &bits() const noexcept { return atoms_; }
    [[nodiscard]] UniversePtr const &universe() const noexcept { return universe_; }

    //! Member atom ids in universe order.
    [[nodiscard]] std::vector<AtomId> atoms() const {
        std::vector<AtomId> out;
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            if (atoms_.test(i)) {
                out.push_back(static_cast<AtomId>(i));
            }
        }
        return out;
    }

    //! Member names sorted alphabetically.
    [[nodiscard]] std::vector<std::string> sorted_names() const {
        std::vector<std::string> out;
        for (auto id : atoms()) {
            out.push_back(universe_->name(id));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    //! `{a,b,c}` with names sorted alphabetically.
    [[nodiscard]] std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (auto const &name : sorted_names()) {
            out += (first ? "" : ",") + name;
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(Interpretation const &a, Interpretation const &b) {
        return a.atoms_ == b.atoms_ && (a.universe_ == b.universe_ || *a.universe_ == *b.universe_);
    }

private:
    UniversePtr universe_;
    AtomSet atoms_;
};

inline bool same_universe(UniversePtr const &a, UniversePtr const &b) { return a == b || *a == *b; }

inline void require_same_universe(Interpretation const &a, Interpretation const &b) {
    if (!same_universe(a.universe(), b.universe())) {
        throw UniverseMismatch();
    }
}

inline bool is_subset(AtomSet const &a, AtomSet const &b) { return (a & ~b).none(); }

//! Three-valued interpretation as (lower, upper): true atoms, possibly-true atoms.
struct InterpretationPair {
    Interpretation lower;
    Interpretation upper;

    InterpretationPair(Interpretation lo, Interpretation up)
        : lower(std::move(lo))
        , upper(std::move(up)) {
        require_same_universe(lower, upper);
    }

    static InterpretationPair exact(Interpretation const &x) { return {x, x}; }

    [[nodiscard]] bool is_consistent() const { return is_subset(lower.bits(), upper.bits()); }
    [[nodiscard]] bool is_exact() const { return lower.bits() == upper.bits(); }
    [[nodiscard]] std::string to_string() const { return "(" + lower.to_string() + ", " + upper.to_string() + ")"; }

    friend bool operator==(InterpretationPair const &, InterpretationPair const &) = default;
};

//! a ⊆ b.
inline bool leq_subset(Interpretation const &a, Interpretation const &b) {
    require_same_universe(a, b);
    return is_subset(a.bits(), b.bits());
}

//! (X, Y) ≤p (X', Y') iff X ⊆ X' and Y' ⊆ Y.
inline bool leq_precision(InterpretationPair const &a, InterpretationPair const &b) {
    require_same_universe(a.lower, b.lower);
    return is_subset(a.lower.bits(), b.lower.bits()) && is_subset(b.upper.bits(), a.upper.bits());
}

namespace detail {

//! Atoms of `upper` \ `lower`, optionally restricted to `restrict`, in universe order.
inline std::vector<AtomId> free_atoms(AtomSet const &lower, AtomSet const &upper, std::size_t universe_size,
                                      std::optional<std::span<AtomId const>> restrict = std::nullopt) {
    std::vector<AtomId> out;
    AtomSet diff = upper & ~lower;
    if (restrict) {
        AtomSet mask;
        for (auto a : *restrict) {
            mask.set(a);
        }
        diff &= mask;
    }
    for (std::size_t i = 0; i < universe_size; ++i) {
        if (diff.test(i)) {
            out.push_back(static_cast<AtomId>(i));
        }
    }
    return out;
}

//! Calls `visit(Z)` for every Z = base ∪ S with S ⊆ free, in binary counting order
//! (free[0] is the least significant bit). Stops early when `visit` returns false.
template <class Visit>
bool for_each_subset(AtomSet const &base, std::span<AtomId const> free, Visit &&visit) {
    if (free.size() > kMaxFreeAtoms) {
        throw TooLarge("interval has " + std::to_string(free.size()) + " free atoms (limit " +
                       std::to_string(kMaxFreeAtoms) + ")");
    }
    std::uint64_t const count = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        AtomSet z = base;
        for (std::size_t k = 0; k < free.size(); ++k) {
            if ((mask >> k) & 1U) {
                z.set(free[k]);
            }
        }
        if (!visit(z)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

//! All Z with x ⊆ Z ⊆ y in binary counting order over y \ x. With `restrict`,
//! atoms outside it stay at their value in x and only restricted atoms vary.
inline std::vector<Interpretation> enumerate_interval(Interpretation const &x, Interpretation const &y,
                                                      std::optional<std::vector<AtomId>> const &restrict = std::nullopt) {
    require_same_universe(x, y);
    if (!is_subset(x.bits(), y.bits())) {
        throw InconsistentPair();
    }
    std::optional<std::span<AtomId const>> view;
    if (restrict) {
        view = std::span<AtomId const>(*restrict);
    }
    auto free = detail::free_atoms(x.bits(), y.bits(), x.universe()->size(), view);
    std::vector<Interpretation> out;
    detail::for_each_subset(x.bits(), free, [&](AtomSet const &z) {
        out.emplace_back(x.universe(), z);
        return true;
    });
    return out;
}

//! Every consistent pair over the first `n` atoms, ordered by lower then upper in counting order.
template <class Visit>
void for_each_consistent_pair(std::size_t n, Visit &&visit) {
    if (n > 12) {
        throw TooLarge("exhaustive pair enumeration limited to 12 atoms");
    }
    std::vector<AtomId> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = static_cast<AtomId>(i);
    }
    detail::for_each_subset(AtomSet{}, all, [&](AtomSet const &lower) {
        auto rest = detail::free_atoms(lower, ~AtomSet{}, n);
        detail::for_each_subset(lower, rest, [&](AtomSet const &upper) {
            visit(lower, upper);
            return true;
        });
        return true;
    });
}

} // namespace aggsem

#endif

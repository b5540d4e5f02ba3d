#ifndef AGGSEM_SYNTAX_HPP
#define AGGSEM_SYNTAX_HPP

#include <aggsem/error.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace aggsem {

//! Upper bound on the number of atoms a universe may hold.
inline constexpr std::size_t kMaxAtoms = 256;

using AtomId = std::uint32_t;

//! Ordered, immutable set of atom names. Atom ids index into it.
class Universe {
public:
    Universe() = default;

    explicit Universe(std::vector<std::string> names) {
        for (auto &name : names) {
            add(std::move(name));
        }
    }

    static std::shared_ptr<Universe const> make(std::vector<std::string> names) {
        return std::make_shared<Universe const>(std::move(names));
    }

    //! Returns the id of `name`, appending it if new.
    AtomId add(std::string name) {
        if (auto it = index_.find(name); it != index_.end()) {
            return it->second;
        }
        if (names_.size() >= kMaxAtoms) {
            throw TooLarge("universe exceeds " + std::to_string(kMaxAtoms) + " atoms");
        }
        auto id = static_cast<AtomId>(names_.size());
        index_.emplace(name, id);
        names_.push_back(std::move(name));
        return id;
    }

    [[nodiscard]] std::optional<AtomId> find(std::string_view name) const {
        if (auto it = index_.find(std::string(name)); it != index_.end()) {
            return it->second;
        }
        return std::nullopt;
    }

    [[nodiscard]] AtomId id(std::string_view name) const {
        if (auto found = find(name)) {
            return *found;
        }
        throw UnknownAtom(std::string(name));
    }

    [[nodiscard]] std::string const &name(AtomId id) const { return names_.at(id); }
    [[nodiscard]] std::vector<std::string> const &names() const noexcept { return names_; }
    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }

    friend bool operator==(Universe const &a, Universe const &b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> index_;
};

using UniversePtr = std::shared_ptr<Universe const>;

enum class AggFunc { Sum, Prod, Card, Min, Max, Avg };
enum class Cmp { Lt, Le, Gt, Ge, Eq, Ne };

struct Literal {
    AtomId atom = 0;
    bool negated = false;

    friend bool operator==(Literal const &, Literal const &) = default;
    friend auto operator<=>(Literal const &, Literal const &) = default;
};

struct AggEntry {
    std::int64_t weight = 0;
    Literal cond;

    friend bool operator==(AggEntry const &, AggEntry const &) = default;
};

//! `func{w1:l1, ..., wk:lk} cmp bound`. Entries form a multiset; duplicates count separately.
struct AggregateAtom {
    AggFunc func = AggFunc::Sum;
    std::vector<AggEntry> entries;
    Cmp cmp = Cmp::Ge;
    std::int64_t bound = 0;

    friend bool operator==(AggregateAtom const &, AggregateAtom const &) = default;
};

using BodyElement = std::variant<Literal, AggregateAtom>;
using Body = std::vector<BodyElement>;

struct Rule {
    AtomId head = 0;
    Body body;

    friend bool operator==(Rule const &, Rule const &) = default;
};

struct Program {
    UniversePtr universe = std::make_shared<Universe const>();
    std::vector<Rule> rules;

    [[nodiscard]] bool has_aggregates() const {
        for (auto const &rule : rules) {
            for (auto const &elem : rule.body) {
                if (std::holds_alternative<AggregateAtom>(elem)) {
                    return true;
                }
            }
        }
        return false;
    }
};

//! A body read as a disjunction of conjunctive bodies.
using DisjunctiveBody = std::vector<Body>;

//! One entry per head atom: the disjunction of all bodies of rules with that head.
struct DisjunctiveBodyProgram {
    UniversePtr universe;
    std::vector<std::pair<AtomId, DisjunctiveBody>> heads;
};

//! Groups the bodies of `program` by head. Heads keep first-occurrence order,
//! bodies keep source order.
inline DisjunctiveBodyProgram combine_rules_per_head(Program const &program) {
    DisjunctiveBodyProgram out{program.universe, {}};
    std::map<AtomId, std::size_t> slot;
    for (auto const &rule : program.rules) {
        auto [it, inserted] = slot.emplace(rule.head, out.heads.size());
        if (inserted) {
            out.heads.emplace_back(rule.head, DisjunctiveBody{});
        }
        out.heads[it->second].second.push_back(rule.body);
    }
    return out;
}

inline bool is_aggregate(BodyElement const &elem) { return std::holds_alternative<AggregateAtom>(elem); }

//! Atoms occurring in the conditions of `agg`, ascending and without duplicates.
inline std::vector<AtomId> condition_atoms(AggregateAtom const &agg) {
    std::vector<AtomId> atoms;
    for (auto const &entry : agg.entries) {
        atoms.push_back(entry.cond.atom);
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

// ---------------------------------------------------------------------------
// Printing

inline char const *to_string(AggFunc func) {
    switch (func) {
    case AggFunc::Sum: return "sum";
    case AggFunc::Prod: return "prod";
    case AggFunc::Card: return "card";
    case AggFunc::Min: return "min";
    case AggFunc::Max: return "max";
    case AggFunc::Avg: return "avg";
    }
    return "?";
}

inline char const *to_string(Cmp cmp) {
    switch (cmp) {
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
    case Cmp::Eq: return "=";
    case Cmp::Ne: return "!=";
    }
    return "?";
}

inline std::string to_string(Literal const &lit, Universe const &universe) {
    return (lit.negated ? "not " : "") + universe.name(lit.atom);
}

inline std::string to_string(AggregateAtom const &agg, Universe const &universe) {
    std::string out = to_string(agg.func);
    out += '{';
    for (std::size_t i = 0; i < agg.entries.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(agg.entries[i].weight);
        out += ':';
        out += to_string(agg.entries[i].cond, universe);
    }
    out += "} ";
    out += to_string(agg.cmp);
    out += ' ';
    out += std::to_string(agg.bound);
    return out;
}

inline std::string to_string(BodyElement const &elem, Universe const &universe) {
    return std::visit([&](auto const &e) { return to_string(e, universe); }, elem);
}

inline std::string to_string(Body const &body, Universe const &universe) {
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(body[i], universe);
    }
    return out;
}

inline std::string to_string(Rule const &rule, Universe const &universe) {
    std::string out = universe.name(rule.head);
    if (!rule.body.empty()) {
        out += " :- ";
        out += to_string(rule.body, universe);
    }
    out += '.';
    return out;
}

//! Renders `program` in the surface syntax accepted by parse_program. An `#atoms`
//! line is emitted only when the universe is not recoverable from the rules alone.
inline std::string to_string(Program const &program) {
    Universe implied;
    auto note = [&](AtomId id) { implied.add(program.universe->name(id)); };
    for (auto const &rule : program.rules) {
        note(rule.head);
        for (auto const &elem : rule.body) {
            if (auto const *lit = std::get_if<Literal>(&elem)) {
                note(lit->atom);
            } else {
                for (auto const &entry : std::get<AggregateAtom>(elem).entries) {
                    note(entry.cond.atom);
                }
            }
        }
    }
    std::string out;
    if (!(implied == *program.universe) && program.universe->size() > 0) {
        out += "#atoms ";
        auto const &names = program.universe->names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            out += (i > 0 ? ", " : "") + names[i];
        }
        out += ".\n";
    }
    for (auto const &rule : program.rules) {
        out += to_string(rule, *program.universe);
        out += '\n';
    }
    return out;
}

} // namespace aggsem

#endif

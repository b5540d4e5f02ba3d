#ifndef AGGSEM_RANDOM_HPP
#define AGGSEM_RANDOM_HPP

#include <aggsem/analysis.hpp>
#include <aggsem/syntax.hpp>

#include <random>
#include <string>
#include <vector>

namespace aggsem {

//! Shape of randomly generated programs. Defaults: ≤ 6 atoms, ≤ 8 rules,
//! ≤ 3 body elements, weights and bounds in [-3, 3], every function and comparison.
struct GeneratorParams {
    std::size_t min_atoms = 1;
    std::size_t max_atoms = 6;
    std::size_t max_rules = 8;
    std::size_t max_body = 3;
    std::size_t max_entries = 3;
    std::int64_t weight_min = -3;
    std::int64_t weight_max = 3;
    double aggregate_probability = 0.5;
    double negation_probability = 0.3;
    std::vector<AggFunc> functions{AggFunc::Sum, AggFunc::Prod, AggFunc::Card,
                                   AggFunc::Min, AggFunc::Max,  AggFunc::Avg};
    std::vector<Cmp> comparisons{Cmp::Lt, Cmp::Le, Cmp::Gt, Cmp::Ge, Cmp::Eq, Cmp::Ne};
    bool convex_only = false; //!< resample aggregates until is_convex holds
};

class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed, GeneratorParams params = {})
        : rng_(seed)
        , params_(std::move(params)) {}

    std::mt19937_64 &rng() { return rng_; }
    GeneratorParams const &params() const { return params_; }

    //! Universe `a0..a{n-1}`.
    static UniversePtr numbered_universe(std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
        return Universe::make(std::move(names));
    }

    Literal literal(std::size_t n_atoms) {
        return {static_cast<AtomId>(uniform(0, static_cast<std::int64_t>(n_atoms) - 1)),
                chance(params_.negation_probability)};
    }

    AggregateAtom aggregate(std::size_t n_atoms, std::size_t max_entries) {
        while (true) {
            AggregateAtom a;
            a.func = pick(params_.functions);
            a.cmp = pick(params_.comparisons);
            a.bound = uniform(params_.weight_min, params_.weight_max);
            auto entries = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_entries)));
            for (std::size_t i = 0; i < entries; ++i) {
                a.entries.push_back({uniform(params_.weight_min, params_.weight_max), literal(n_atoms)});
            }
            if (!params_.convex_only || is_convex(a)) return a;
        }
    }

    AggregateAtom aggregate(std::size_t n_atoms) { return aggregate(n_atoms, params_.max_entries); }

    Program program() {
        auto n = static_cast<std::size_t>(
            uniform(static_cast<std::int64_t>(params_.min_atoms), static_cast<std::int64_t>(params_.max_atoms)));
        Program p{numbered_universe(n), {}};
        auto rules = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(params_.max_rules)));
        for (std::size_t r = 0; r < rules; ++r) {
            Rule rule{static_cast<AtomId>(uniform(0, static_cast<std::int64_t>(n) - 1)), {}};
            auto body = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(params_.max_body)));
            for (std::size_t b = 0; b < body; ++b) {
                if (chance(params_.aggregate_probability)) {
                    rule.body.emplace_back(aggregate(n));
                } else {
                    rule.body.emplace_back(literal(n));
                }
            }
            p.rules.push_back(std::move(rule));
        }
        return p;
    }

private:
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
    template <class T> T pick(std::vector<T> const &xs) { return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))]; }

    std::mt19937_64 rng_;
    GeneratorParams params_;
};

} // namespace aggsem

#endif

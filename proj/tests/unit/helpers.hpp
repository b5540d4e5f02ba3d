#ifndef AGGSEM_TEST_HELPERS_HPP
#define AGGSEM_TEST_HELPERS_HPP

#include <aggsem/aggsem.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline aggsem::Program load(std::string const &name) {
    std::ifstream in(std::string(AGGSEM_PROGRAMS_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing program " + name);
    return aggsem::parse_program(in);
}

inline aggsem::Interpretation interp(aggsem::Program const &p, std::string const &atoms) {
    return aggsem::parse_interpretation(atoms, p.universe);
}

inline aggsem::InterpretationPair pair(aggsem::Program const &p, std::string const &lo, std::string const &up) {
    return {interp(p, lo), interp(p, up)};
}

//! First aggregate atom in rule order.
inline aggsem::AggregateAtom const &first_aggregate(aggsem::Program const &p) {
    for (auto const &r : p.rules)
        for (auto const &e : r.body)
            if (auto const *a = std::get_if<aggsem::AggregateAtom>(&e)) return *a;
    throw std::runtime_error("no aggregate");
}

//! Renders stable models as one string, e.g. "{} {p}".
inline std::string models(std::vector<aggsem::Interpretation> const &ms) {
    std::string out;
    for (auto const &m : ms) out += (out.empty() ? "" : " ") + m.to_string();
    return out;
}

} // namespace testing

#endif

#ifndef AGGSEM_TOOLS_CLI_HPP
#define AGGSEM_TOOLS_CLI_HPP

#include <aggsem/aggsem.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace aggsem::cli {

enum ExitCode : int { kOk = 0, kSemanticFailure = 1, kUsage = 2, kCapability = 3 };

//! Exhaustive analyses (`analyze`) never enumerate pairs over more atoms than this.
inline constexpr std::size_t kMaxAnalysisAtoms = 10;

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string input = "-";
    std::string semantics = "ult";
    std::string model;
    bool json = false;
    std::size_t max_atoms = kDefaultMaxAtoms;
    std::uint64_t seed = 1;
    std::size_t random = 0;
};

namespace detail {

inline std::vector<SemanticsId> parse_semantics_list(std::string const &text, bool *saw_all = nullptr) {
    std::vector<SemanticsId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            out.insert(out.end(), kAllSemantics.begin(), kAllSemantics.end());
            if (saw_all) *saw_all = true;
            continue;
        }
        auto sem = parse_semantics(item);
        if (!sem) throw CLI::ValidationError("--semantics", "unknown semantics '" + item + "'");
        out.push_back(*sem);
    }
    if (out.empty()) throw CLI::ValidationError("--semantics", "no semantics given");
    return out;
}

inline Json names(Interpretation const &i) { return Json(i.sorted_names()); }

inline Json model_list(std::vector<Interpretation> const &models) {
    Json arr = Json::array();
    for (auto const &m : models) arr.push_back(names(m));
    return arr;
}

inline std::string model_line(std::vector<Interpretation> const &models) {
    if (models.empty()) return "(none)";
    std::string out;
    for (auto const &m : models) out += (out.empty() ? "" : " ") + m.to_string();
    return out;
}

inline Json semantics_json(std::vector<SemanticsId> const &sems) {
    Json arr = Json::array();
    for (auto s : sems) arr.push_back(to_string(s));
    return arr;
}

inline std::size_t name_width(std::vector<SemanticsId> const &sems) {
    std::size_t w = 0;
    for (auto s : sems) w = std::max(w, std::string(to_string(s)).size());
    return w;
}

inline std::string padded(SemanticsId s, std::size_t width) {
    std::string name = to_string(s);
    return name + std::string(width - name.size() + 2, ' ');
}

class Runner {
public:
    Runner(Config cfg, std::ostream &out, std::istream &in)
        : cfg_(std::move(cfg))
        , out_(out)
        , in_(in) {}

    int run() {
        sems_ = parse_semantics_list(cfg_.semantics, &expand_all_);
        doc_["command"] = cfg_.command;
        if (cfg_.command != "parse") doc_["semantics"] = semantics_json(sems_);
        int code = dispatch();
        if (cfg_.json) out_ << doc_.dump() << '\n';
        return code;
    }

private:
    Program load() {
        if (cfg_.input == "-") return parse_program(in_);
        std::ifstream file(cfg_.input);
        if (!file) throw CLI::FileError::Missing(cfg_.input);
        return parse_program(file);
    }

    int dispatch() {
        if (cfg_.command == "verify" && cfg_.random > 0) return verify_random();
        auto p = load();
        if (expand_all_) keep_applicable(p);
        if (cfg_.command == "parse") return parse(p);
        if (cfg_.command == "models") return models(p);
        if (cfg_.command == "compare") return compare(p);
        if (cfg_.command == "check") return check(p);
        if (cfg_.command == "kk" || cfg_.command == "wf") return fixpoint(p);
        if (cfg_.command == "analyze") return analyze(p);
        return verify(p);
    }

    // `all` silently drops semantics that cannot run on this program or command.
    void keep_applicable(Program const &p) {
        bool fixpoint = cfg_.command == "kk" || cfg_.command == "wf";
        std::erase_if(sems_, [&](SemanticsId s) {
            return (s == SemanticsId::Gl && p.has_aggregates()) || (fixpoint && !has_truth_function(s));
        });
        doc_["semantics"] = semantics_json(sems_);
    }

    int parse(Program const &p) {
        if (cfg_.json) {
            doc_["report"] = {{"atoms", p.universe->names()}, {"rules", p.rules.size()}, {"program", to_string(p)}};
        } else {
            out_ << to_string(p);
        }
        return kOk;
    }

    int models(Program const &p) {
        if (sems_.size() > 1) return compare(p);
        auto ms = stable_enumerate(sems_[0], p, cfg_.max_atoms);
        if (cfg_.json) {
            doc_["models"] = model_list(ms);
        } else {
            for (auto const &m : ms) out_ << m.to_string() << '\n';
        }
        return kOk;
    }

    int compare(Program const &p) {
        Json obj = Json::object();
        auto width = name_width(sems_);
        for (auto s : sems_) {
            auto ms = stable_enumerate(s, p, cfg_.max_atoms);
            if (cfg_.json) {
                obj[to_string(s)] = model_list(ms);
            } else {
                out_ << padded(s, width) << model_line(ms) << '\n';
            }
        }
        if (cfg_.json) doc_["models"] = obj;
        return kOk;
    }

    int check(Program const &p) {
        auto y = parse_interpretation(cfg_.model, p.universe);
        bool all = true;
        Json obj = Json::object();
        auto width = name_width(sems_);
        for (auto s : sems_) {
            bool stable = stable_check(s, p, y);
            all &= stable;
            if (cfg_.json) {
                obj[to_string(s)] = stable;
            } else {
                out_ << padded(s, width) << y.to_string() << (stable ? " is stable" : " is not stable") << '\n';
            }
        }
        if (cfg_.json) doc_["report"] = {{"model", names(y)}, {"stable", obj}};
        return all ? kOk : kSemanticFailure;
    }

    int fixpoint(Program const &p) {
        bool wf = cfg_.command == "wf";
        Json obj = Json::object();
        auto width = name_width(sems_);
        for (auto s : sems_) {
            auto pair = wf ? well_founded(s, p).pair : kripke_kleene(s, p);
            Json entry = {{"lower", names(pair.lower)}, {"upper", names(pair.upper)}};
            if (sems_.size() == 1) {
                obj = entry;
            } else {
                obj[to_string(s)] = entry;
            }
            if (!cfg_.json) {
                out_ << padded(s, width) << "lower " << pair.lower.to_string() << "  upper " << pair.upper.to_string()
                     << '\n';
            }
        }
        if (cfg_.json) doc_[wf ? "wf" : "kk"] = obj;
        return kOk;
    }

    int analyze(Program const &p) {
        std::size_t limit = std::min(cfg_.max_atoms, kMaxAnalysisAtoms);
        Json aggregates = Json::array();
        for (auto const &rule : p.rules) {
            for (auto const &elem : rule.body) {
                if (auto const *a = std::get_if<AggregateAtom>(&elem)) {
                    bool convex = is_convex(*a);
                    aggregates.push_back({{"aggregate", to_string(*a, *p.universe)}, {"convex", convex}});
                    if (!cfg_.json) {
                        out_ << "aggregate " << to_string(*a, *p.universe) << (convex ? ": convex" : ": not convex")
                             << '\n';
                    }
                }
            }
        }
        Json behaved = Json::object();
        for (auto s : sems_) {
            if (s == SemanticsId::Gl && p.has_aggregates()) continue;
            auto r = check_well_behaved(s, p, limit);
            Json entry = {{"holds", r.holds}};
            std::string line = std::string(to_string(s)) + ": " + (r.holds ? "well-behaved" : "not well-behaved");
            if (r.counterexample) {
                auto const &c = *r.counterexample;
                bool ext = c.kind == WellBehavedViolation::Kind::Extension;
                entry["violation"] = ext ? "extension" : "monotonicity";
                entry["formula"] = c.formula;
                entry["weaker"] = c.weaker.to_string();
                entry["stronger"] = c.stronger.to_string();
                line += ext ? " (disagrees with two-valued satisfaction at " + c.weaker.to_string() + " on " +
                                  c.formula + ")"
                            : " (" + c.weaker.to_string() + " satisfies " + c.formula + " but the more precise " +
                                  c.stronger.to_string() + " does not)";
            }
            behaved[to_string(s)] = entry;
            if (!cfg_.json) out_ << line << '\n';
        }
        Json precision = Json::array();
        for (std::size_t i = 0; i < sems_.size(); ++i) {
            for (std::size_t j = i + 1; j < sems_.size(); ++j) {
                auto a = sems_[i];
                auto b = sems_[j];
                if ((a == SemanticsId::Gl || b == SemanticsId::Gl) && p.has_aggregates()) continue;
                auto r = compare_precision(a, b, p, limit);
                std::string rel = std::string(to_string(a)) + " " +
                                  (r.order == PrecisionOrder::Equal         ? "=="
                                   : r.order == PrecisionOrder::ALeqB       ? "<=p"
                                   : r.order == PrecisionOrder::BLeqA       ? ">=p"
                                                                            : "incomparable with") +
                                  " " + to_string(b);
                Json entry = {{"a", to_string(a)}, {"b", to_string(b)}, {"order", to_string(r.order)}};
                auto witness = [](PrecisionWitness const &w) {
                    return Json{{"pair", w.pair.to_string()}, {"formula", w.formula}};
                };
                if (r.only_a) entry["only_a"] = witness(*r.only_a);
                if (r.only_b) entry["only_b"] = witness(*r.only_b);
                precision.push_back(entry);
                if (!cfg_.json) out_ << "precision: " << rel << '\n';
            }
        }
        if (cfg_.json) {
            doc_["report"] = {{"aggregates", aggregates}, {"well_behaved", behaved}, {"precision", precision}};
        }
        return kOk;
    }

    void emit_verification(VerificationReport const &r, Json &report) {
        Json mism = Json::array();
        for (auto const &m : r.mismatches) {
            mism.push_back({{"input", m.input}, {"main", m.main}, {"oracle", m.oracle}});
            if (!cfg_.json) out_ << "mismatch: " << m.input << ": main " << m.main << ", oracle " << m.oracle << '\n';
        }
        report["checked"] = report.value("checked", std::size_t{0}) + r.checked;
        auto &all = report["mismatches"];
        if (all.is_null()) all = Json::array();
        for (auto &m : mism) all.push_back(m);
    }

    int verify(Program const &p) {
        auto r = verify_program(p, sems_, cfg_.max_atoms);
        Json report = Json::object();
        emit_verification(r, report);
        Json models = Json::object();
        for (auto const &[s, ms] : r.models) models[to_string(s)] = model_list(ms);
        if (cfg_.json) {
            doc_["models"] = models;
            doc_["report"] = report;
        } else {
            auto width = name_width(sems_);
            for (auto const &[s, ms] : r.models) out_ << padded(s, width) << model_line(ms) << '\n';
            out_ << "checked " << r.checked << ", mismatches " << r.mismatches.size() << '\n';
        }
        return r.ok() ? kOk : kSemanticFailure;
    }

    int verify_random() {
        ProgramGenerator gen(cfg_.seed);
        Json report = Json::object();
        std::size_t mismatches = 0;
        for (std::size_t k = 0; k < cfg_.random; ++k) {
            auto p = gen.program();
            auto r = verify_program(p, sems_, cfg_.max_atoms);
            mismatches += r.mismatches.size();
            if (!r.ok() && !cfg_.json) out_ << "program " << k << ":\n" << to_string(p);
            emit_verification(r, report);
        }
        report["programs"] = cfg_.random;
        report["seed"] = cfg_.seed;
        if (cfg_.json) {
            doc_["report"] = report;
        } else {
            out_ << "programs " << cfg_.random << ", checked " << report["checked"].get<std::size_t>()
                 << ", mismatches " << mismatches << '\n';
        }
        return mismatches == 0 ? kOk : kSemanticFailure;
    }

    Config cfg_;
    std::ostream &out_;
    std::istream &in_;
    std::vector<SemanticsId> sems_;
    bool expand_all_ = false;
    Json doc_ = Json::object();
};

} // namespace detail

//! Runs the command line `args` (without the program name). Returns the exit code.
inline int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err, std::istream &in) {
    CLI::App app{"Stable-model and fixpoint semantics for logic programs with aggregates", "aggsem"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App *sub, bool takes_input) {
        if (takes_input) sub->add_option("input", cfg.input, "Program file, or - for standard input");
        sub->add_option("-s,--semantics", cfg.semantics,
                        "Comma-separated list of gl, triv, gz, ult, lpst, bnd, mr, flp, ultimate (or all)")
            ->capture_default_str();
        sub->add_flag("--json", cfg.json, "Emit one JSON document");
        sub->add_option("--max-atoms", cfg.max_atoms, "Largest universe to enumerate")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };

    struct Spec {
        char const *name;
        char const *help;
    };
    for (auto [name, help] : {Spec{"parse", "Parse a program and print it back"},
                              Spec{"models", "Enumerate stable models"},
                              Spec{"check", "Check whether --model is a stable model"},
                              Spec{"kk", "Kripke-Kleene fixpoint"},
                              Spec{"wf", "Well-founded fixpoint"},
                              Spec{"compare", "Stable models side by side for several semantics"},
                              Spec{"analyze", "Convexity of aggregates plus well-behavedness and precision reports"},
                              Spec{"verify", "Cross-check results against brute-force oracles"}}) {
        auto *sub = app.add_subcommand(name, help);
        add_common(sub, true);
        sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
        if (std::string(name) == "check") {
            sub->add_option("-m,--model", cfg.model, "Candidate model, comma-separated atoms")->required();
        }
        if (std::string(name) == "verify") {
            sub->add_option("--seed", cfg.seed, "Seed for --random")->capture_default_str();
            sub->add_option("--random", cfg.random, "Verify this many generated programs instead of an input");
        }
    }

    std::vector<char const *> argv{"aggsem"};
    for (auto const &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const &e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        return detail::Runner(cfg, out, in).run();
    } catch (CLI::Error const &e) {
        err << "aggsem: " << e.what() << '\n';
        return kUsage;
    } catch (ParseError const &e) {
        err << "aggsem: " << (cfg.input == "-" ? "<stdin>" : cfg.input) << ":" << e.what() << '\n';
        return kUsage;
    } catch (CapabilityError const &e) {
        err << "aggsem: " << e.what() << '\n';
        return kCapability;
    } catch (Error const &e) {
        err << "aggsem: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace aggsem::cli

#endif

#ifndef AGGSEM_PARSER_HPP
#define AGGSEM_PARSER_HPP

#include <aggsem/interp.hpp>
#include <aggsem/syntax.hpp>

#include <charconv>
#include <istream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace aggsem {

namespace detail {

enum class Tok { Atom, Int, If, Dot, Comma, Colon, LBrace, RBrace, CmpOp, Directive, Semi, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident(char c) {
    return is_lower(c) || (c >= 'A' && c <= 'Z') || is_digit(c) || c == '_';
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        std::size_t l = line;
        std::size_t k = col;
        auto emit = [&](Tok kind, std::size_t len) {
            out.push_back({kind, std::string(text.substr(i, len)), l, k});
            advance(len);
        };
        auto next = [&](std::size_t off) { return i + off < text.size() ? text[i + off] : '\0'; };
        if (is_lower(c)) {
            std::size_t len = 1;
            while (is_ident(next(len))) {
                ++len;
            }
            emit(Tok::Atom, len);
        } else if (is_digit(c) || (c == '-' && is_digit(next(1)))) {
            std::size_t len = 1;
            while (is_digit(next(len))) {
                ++len;
            }
            emit(Tok::Int, len);
        } else if (c == ':' && next(1) == '-') {
            emit(Tok::If, 2);
        } else if (c == ':') {
            emit(Tok::Colon, 1);
        } else if (c == '.') {
            emit(Tok::Dot, 1);
        } else if (c == ',') {
            emit(Tok::Comma, 1);
        } else if (c == ';') {
            emit(Tok::Semi, 1);
        } else if (c == '|') {
            emit(Tok::Bar, 1);
        } else if (c == '{') {
            emit(Tok::LBrace, 1);
        } else if (c == '}') {
            emit(Tok::RBrace, 1);
        } else if ((c == '<' || c == '>' || c == '!') && next(1) == '=') {
            emit(Tok::CmpOp, 2);
        } else if (c == '<' || c == '>' || c == '=') {
            emit(Tok::CmpOp, 1);
        } else if (c == '#') {
            std::size_t len = 1;
            while (is_ident(next(len))) {
                ++len;
            }
            emit(Tok::Directive, len);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l, k);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

inline std::optional<AggFunc> aggregate_keyword(std::string_view word) {
    if (word == "sum") return AggFunc::Sum;
    if (word == "prod") return AggFunc::Prod;
    if (word == "card") return AggFunc::Card;
    if (word == "min") return AggFunc::Min;
    if (word == "max") return AggFunc::Max;
    if (word == "avg") return AggFunc::Avg;
    return std::nullopt;
}

inline Cmp comparison(std::string_view op) {
    if (op == "<") return Cmp::Lt;
    if (op == "<=") return Cmp::Le;
    if (op == ">") return Cmp::Gt;
    if (op == ">=") return Cmp::Ge;
    if (op == "=") return Cmp::Eq;
    return Cmp::Ne;
}

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : tokens_(tokenize(text)) {}

    Program parse() {
        std::vector<Rule> rules;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Directive) {
                declaration();
            } else {
                rules.push_back(rule());
            }
        }
        Program program;
        program.universe = std::make_shared<Universe const>(std::move(universe_));
        program.rules = std::move(rules);
        return program;
    }

private:
    Token const &peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    Token const &take() {
        Token const &t = tokens_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }
    [[noreturn]] static void fail(Token const &at, std::string const &message) {
        throw ParseError(message, at.line, at.column);
    }
    Token const &expect(Tok kind, char const *what) {
        if (peek().kind != kind) {
            fail(peek(), std::string("expected ") + what + (peek().kind == Tok::End ? " before end of input" : " but found '" + peek().text + "'"));
        }
        return take();
    }

    AtomId atom(char const *what) {
        auto const &t = expect(Tok::Atom, what);
        if (t.text == "not") {
            fail(t, "'not' is reserved and cannot name an atom");
        }
        return universe_.add(t.text);
    }

    void declaration() {
        auto const &t = take();
        if (t.text != "#atoms") {
            fail(t, "unknown directive '" + t.text + "'");
        }
        if (declared_) {
            fail(t, "duplicate #atoms declaration");
        }
        declared_ = true;
        atom("atom name");
        while (peek().kind == Tok::Comma) {
            take();
            atom("atom name");
        }
        expect(Tok::Dot, "'.'");
    }

    Rule rule() {
        if (peek().kind == Tok::If) {
            fail(peek(), "rule without head: constraints are not supported");
        }
        Rule r;
        r.head = atom("rule head");
        if (auto k = peek().kind; k == Tok::Comma || k == Tok::Semi || k == Tok::Bar) {
            fail(peek(), "head with more than one atom");
        }
        if (peek().kind == Tok::If) {
            take();
            r.body.push_back(element());
            while (peek().kind == Tok::Comma) {
                take();
                r.body.push_back(element());
            }
        }
        expect(Tok::Dot, "',' or '.'");
        return r;
    }

    Literal literal() {
        Literal lit;
        if (peek().kind == Tok::Atom && peek().text == "not") {
            take();
            lit.negated = true;
        }
        lit.atom = atom("atom");
        return lit;
    }

    BodyElement element() {
        if (peek().kind == Tok::Atom && peek(1).kind == Tok::LBrace) {
            if (auto func = aggregate_keyword(peek().text)) {
                take();
                return aggregate(*func);
            }
            fail(peek(), "unknown aggregate function '" + peek().text + "'");
        }
        return literal();
    }

    std::int64_t integer() {
        auto const &t = expect(Tok::Int, "integer");
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            fail(t, "integer out of range '" + t.text + "'");
        }
        return value;
    }

    AggregateAtom aggregate(AggFunc func) {
        AggregateAtom agg;
        agg.func = func;
        expect(Tok::LBrace, "'{'");
        if (peek().kind != Tok::RBrace) {
            agg.entries.push_back(entry());
            while (peek().kind == Tok::Comma) {
                take();
                agg.entries.push_back(entry());
            }
        }
        expect(Tok::RBrace, "'}'");
        agg.cmp = comparison(expect(Tok::CmpOp, "comparison operator").text);
        agg.bound = integer();
        return agg;
    }

    AggEntry entry() {
        AggEntry e;
        e.weight = integer();
        expect(Tok::Colon, "':'");
        bool is_literal = peek().kind == Tok::Atom && peek(1).kind != Tok::LBrace;
        if (peek().kind == Tok::Atom && peek().text == "not") {
            is_literal = peek(1).kind == Tok::Atom && peek(2).kind != Tok::LBrace;
        }
        if (!is_literal) {
            fail(peek(), "aggregate condition must be a literal");
        }
        e.cond = literal();
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Universe universe_;
    bool declared_ = false;
};

} // namespace detail

//! Parses a ground program. The universe lists atoms in first-occurrence order,
//! `#atoms` declarations included.
inline Program parse_program(std::string_view text) { return detail::ProgramParser(text).parse(); }

inline Program parse_program(std::istream &in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_program(text);
}

//! Parses a comma-separated list of atom names, e.g. "p,q". The empty string is the empty set.
inline Interpretation parse_interpretation(std::string_view text, UniversePtr const &universe) {
    Interpretation out(universe);
    std::size_t start = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) {
        return out;
    }
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto name = trim(text.substr(start, end - start));
        out.insert(universe->id(name));
        start = end + 1;
    }
    return out;
}

} // namespace aggsem

#endif

#ifndef AGGSEM_ERROR_HPP
#define AGGSEM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aggsem {

//! Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Malformed program or interpretation text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::string const &message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
        , line_(line)
        , column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

//! Interpretations or pairs built over different atom universes.
class UniverseMismatch : public Error {
public:
    UniverseMismatch() : Error("interpretations range over different universes") {}
};

//! An atom name that is not part of the universe.
class UnknownAtom : public Error {
public:
    explicit UnknownAtom(std::string const &name) : Error("unknown atom '" + name + "'") {}
};

//! A pair (X, Y) with X not a subset of Y where a consistent pair is required.
class InconsistentPair : public Error {
public:
    InconsistentPair() : Error("pair is not consistent (lower is not a subset of upper)") {}
};

//! Exhaustive procedure refused because its input exceeds the configured bound.
class TooLarge : public Error {
public:
    using Error::Error;
};

//! A semantics asked for something it does not provide, e.g. a well-founded model under mr.
class CapabilityError : public Error {
public:
    using Error::Error;
};

//! Signed 64-bit overflow while evaluating an aggregate.
class ArithmeticOverflow : public Error {
public:
    ArithmeticOverflow() : Error("arithmetic overflow in aggregate evaluation") {}
};

} // namespace aggsem

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbopt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, invalid parameters. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t row, const std::string& what)
        : InputError("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class NegativeCount : public ParseError {
public:
    using ParseError::ParseError;
};

class ZeroTotal : public ParseError {
public:
    using ParseError::ParseError;
};

class MixedSchema : public ParseError {
public:
    using ParseError::ParseError;
};

class MixedPriors : public ParseError {
public:
    using ParseError::ParseError;
};

/// A score was requested on a performance outside its domain.
class UndefinedScore : public Error {
public:
    explicit UndefinedScore(std::size_t index)
        : Error("score undefined on item " + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Two performances tie under every F-beta.
class DegeneratePair : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class DegenerateSpread : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

}  // namespace fbopt

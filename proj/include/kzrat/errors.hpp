#pragma once

#include <stdexcept>
#include <string>

namespace kzrat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateScalar : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class EvaluationAtPole : public Error {
public:
    using Error::Error;
};

/// Syntax error in scalar text; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised when pole locations coincide (z1 = z2).
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class UnsupportedSpectrum : public Error {
public:
    using Error::Error;
};

class InvalidSeed : public Error {
public:
    using Error::Error;
};

class UnsolvableResonance : public Error {
public:
    using Error::Error;
};

class InvalidPath : public Error {
public:
    using Error::Error;
};

}  // namespace kzrat

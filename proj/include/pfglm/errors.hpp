#pragma once

#include <stdexcept>
#include <string>

namespace pfglm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    using Error::Error;
};

class InvalidPrime : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

/// A Smith form step needed a diagonal entry whose valuation is unknown.
class RankNotCertified : public InsufficientPrecision {
public:
    using InsufficientPrecision::InsufficientPrecision;
};

/// A right-hand side assumed to lie in the image of a matrix has a
/// significant digit outside it.
class MembershipViolated : public Error {
public:
    using Error::Error;
};

class NotZeroDimensional : public Error {
public:
    using Error::Error;
};

class NotSemiStable : public Error {
public:
    using Error::Error;
};

class NotShapePosition : public Error {
public:
    using Error::Error;
};

class DegreeBlowup : public Error {
public:
    using Error::Error;
};

class NotReducedBasis : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class UnknownVariable : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace pfglm

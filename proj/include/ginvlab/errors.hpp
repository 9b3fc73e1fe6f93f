#pragma once

#include <stdexcept>
#include <string>

namespace ginvlab {

// Every failure the library reports derives from Error so callers can catch
// the whole family at once; the subclasses carry the category.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Raised when the Penrose-equation test and the rank/range characterization
// of a generalized-inverse class disagree. Always an internal bug.
class CharacterizationMismatch : public Error {
public:
    using Error::Error;
};

// An identity that must hold exactly did not.
class IdentityViolated : public Error {
public:
    using Error::Error;
};

class UnsupportedClass : public Error {
public:
    using Error::Error;
};

class UnknownCase : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

class InvalidScalar : public Error {
public:
    using Error::Error;
};

}  // namespace ginvlab

#pragma once

#include <stdexcept>
#include <string>

namespace gtop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

// bad family parameters, malformed input files
class ParameterError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parameter"; }
};

class LookupError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "lookup"; }
};

// a map that is not a graph map, a walk with a non-edge, ...
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "validation"; }
};

class PreconditionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "precondition"; }
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "budget"; }
};

}  // namespace gtop

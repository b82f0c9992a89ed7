#pragma once

#include <stdexcept>
#include <string>

namespace gwdesc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built against different truncation policies or gradings.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Precondition violated by the arguments of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input data (model files, tables).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A tautological integral needed for a non-vanishing term is missing.
class TableIncomplete : public Error {
public:
    using Error::Error;
};

// Query outside what the engine evaluates (g >= 1 with beta != 0).
class OutOfScope : public Error {
public:
    using Error::Error;
};

} // namespace gwdesc

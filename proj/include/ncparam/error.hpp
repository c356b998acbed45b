#pragma once

#include <stdexcept>
#include <string>

namespace ncparam {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built on different variable registries, or an unknown symbol.
class RegistryError : public Error {
public:
    using Error::Error;
};

/// Malformed input: graph-file syntax or an invalid ribbon graph.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structural problem with a ribbon graph (dangling half-edge, wrong degree, ...).
class GraphError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Model parameters outside the admissible region (1/4 theta^2 m^4 >= a > 0).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed. Always a bug, never a user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace ncparam

#pragma once

#include <stdexcept>
#include <string>

namespace sepinv {

// Malformed input of any kind: bad field strings, unparsable polynomials,
// dimension mismatches, scene validation failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Raised when the field characteristic divides the group order and an
// averaging construction (Reynolds operator, Molien series) is requested.
class ModularCharacteristicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured cap was exceeded. Recoverable: callers may fall back to a
// cheaper method.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EnumerationCapError : public ResourceCapError {
public:
    using ResourceCapError::ResourceCapError;
};

class HypothesisMissingError : public InputError {
public:
    using InputError::InputError;
};

class NonInvariantError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace sepinv

#pragma once

#include <stdexcept>
#include <string>

namespace skewspec {

// Bad caller input: dimension mismatches, malformed graph data, invalid arguments.
// CLI maps this family to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside the supported range (e.g. enumeration order
// too large, SNF of a singular matrix).
class UnsupportedError : public InputError {
public:
    using InputError::InputError;
};

// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, long line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotControllableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Preconditions of a characterization step not met for this graph, e.g. a mate
// bound requested for a graph outside the F_n family.
class InapplicableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A recovered orthogonal certificate failed its exact verification identities.
// For a genuinely cospectral controllable pair this is a reportable finding,
// not a user mistake; CLI maps it to exit code 1.
class MateVerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace skewspec

#pragma once

#include <stdexcept>
#include <string>

namespace subcone {

// Construction rejected because a type invariant does not hold.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain an operation is defined on.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed external input (JSON, CSV, coordinate literals). The message
// carries the source name and position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical verification procedure could not reach its target.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subcone

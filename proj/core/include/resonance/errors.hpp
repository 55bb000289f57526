#pragma once

#include <stdexcept>
#include <string>

namespace resonance {

// Malformed user input: instance files, graph files, rational literals.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A size guard refused a computation that would not finish at desk scale.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always an implementation bug.
class CrossCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An exact division or exactness assertion failed.
class ExactnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace resonance

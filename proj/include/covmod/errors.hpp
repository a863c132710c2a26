#pragma once

#include <stdexcept>
#include <string>

namespace covmod {

// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A self-check that must never fire fired. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The caller asserted sheaf-existence hypotheses that contradict each other.
class HypothesisConflict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace covmod

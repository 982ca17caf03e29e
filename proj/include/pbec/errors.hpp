#pragma once

#include <stdexcept>
#include <string>

namespace pbec {

/// A precondition on the arguments of an operation does not hold.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would visit more elements than the caller allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A randomized search ran out of candidates before reaching its target.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pbec

#pragma once

#include <stdexcept>
#include <string>

namespace vtcodes {

// Violated precondition: bad alphabet, shape mismatch, malformed text, ...
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A received word that cannot be resolved to a unique codeword
// (more than one error, or the wrong code parameters).
class UncorrectableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive operation would exceed its enumeration budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vtcodes

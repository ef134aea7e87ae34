#pragma once

#include <stdexcept>
#include <string>

namespace wbm {

// Caller passed something structurally wrong (mismatched variable tables,
// negative rank, malformed flags, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// exact_div was asked for a quotient that does not exist.  When this fires
// on an alternant quotient it indicates a bug in a formula, not bad input.
class NotDivisibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation or substitution hit a zero raised to a negative power, or a
// vanishing denominator.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric point fell outside the convergence region required by an
// integral oracle.
class RegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wbm

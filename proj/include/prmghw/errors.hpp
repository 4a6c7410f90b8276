#pragma once

#include <stdexcept>
#include <string>

namespace prmghw {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter (r, m, k, gamma, nu, ...) lies outside the operation's domain.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Arguments are in range but violate a precondition (equal subsets, a family
/// member of the wrong size, mismatched ground sets).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its budget. `required()` is the exact
/// decimal count of objects the search would have to visit (or, for a pruned
/// search that ran out, the number visited before stopping).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::string required)
        : Error(what), required_(std::move(required)) {}

    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

}  // namespace prmghw

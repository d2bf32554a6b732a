#pragma once

#include <stdexcept>
#include <string>

namespace spinamp {

// Quantum numbers or angles outside the domain of a kernel.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Caller violated an operation's precondition (mismatched directions, empty grid, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Two computation routes disagree beyond tolerance, or a quantity that must be
// real carries an imaginary residue.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinamp

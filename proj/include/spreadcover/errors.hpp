#pragma once

#include <stdexcept>
#include <string>

namespace spreadcover {

// Instance too large for the configured vertex cap or search budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation's precondition on a composite object was violated
// (e.g. pruning a collection of cliques that is not a cover).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// A closed-form bound was requested outside its range of validity.
class InapplicableBound : public std::domain_error {
public:
    explicit InapplicableBound(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace spreadcover

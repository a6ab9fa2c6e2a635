#pragma once

#include <stdexcept>
#include <string>

namespace burn {

// Malformed input: bad ids, parse failures, empty schedules.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but violates an algorithm precondition
// (disconnected graph, wrong decomposition kind, invalid decomposition).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

} // namespace burn

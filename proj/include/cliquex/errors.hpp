// errors.hpp - exception taxonomy shared by all cliquex modules
#pragma once

#include <stdexcept>
#include <string>

namespace cliquex {

// Argument outside an operation's mathematical domain (p not in (0,1), k > n, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size/count cap was exceeded (term caps, enumeration bounds, ...).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver hit its iteration cap without meeting tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// File/stream failures surfaced by fixture and report I/O.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliquex

#pragma once

#include <stdexcept>
#include <string>

namespace iab {

/// Invalid physical state: non-positive radii, ordering violations, wall collapse.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Iterative scheme exhausted its budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Root target not attainable anywhere inside the search bracket.
class BracketError : public ConvergenceError {
public:
    explicit BracketError(const std::string& what) : ConvergenceError(what) {}
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iab

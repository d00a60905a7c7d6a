#pragma once

#include <stdexcept>
#include <string>

namespace angtun {

// Invalid input values (negative energy, non-positive mass, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is valid but outside the validity domain of the requested model
// (e.g. a thick-barrier formula evaluated at E >= V).
class RegimeError : public std::domain_error {
public:
    explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

// Malformed configuration (bad config file key, integrator resolution guard).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures, reported with path context.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Bracketing failure in the crossover search.
class NoCrossoverError : public std::domain_error {
public:
    explicit NoCrossoverError(const std::string& what) : std::domain_error(what) {}
};

} // namespace angtun

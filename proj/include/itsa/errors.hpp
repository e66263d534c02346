#pragma once

#include <stdexcept>
#include <string>

namespace itsa {

/// Malformed or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad input data: gaps, duplicates, unparseable values (CLI exit code 3).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised only when a whole computation is unusable, e.g. every model in a
/// universe failed to converge (CLI exit code 4). Single-model convergence
/// failures are reported through FitResult::converged instead.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace itsa

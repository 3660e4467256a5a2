#pragma once

#include <stdexcept>
#include <string>

namespace tdab {

/// Malformed or invalid run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Destination not writable / input not readable (CLI exit code 3).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric solver failure, e.g. root not bracketed (CLI exit code 4).
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tdab

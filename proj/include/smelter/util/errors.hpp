#pragma once

#include <stdexcept>
#include <string>

namespace smelter {

// Bad user-supplied configuration (CLI exit code 3).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / serialization problems (CLI exit code 1).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Transient provider failure; the caller may retry. Distinct from a
// criteria mismatch, which is not an error at all.
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smelter

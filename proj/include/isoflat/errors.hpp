#pragma once

#include <stdexcept>
#include <string>

namespace isoflat {

/// Violation of a standing hypothesis (curvature budget, domain guard,
/// resolution floor). CLI maps these to exit code 2.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to reach its contract (solver stagnation,
/// path left the chart domain, degenerate configuration). Never silently
/// approximated away.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files or flags. CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace isoflat

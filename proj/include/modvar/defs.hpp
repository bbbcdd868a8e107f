#pragma once

#include <stdexcept>
#include <string>

namespace modvar {

/// Absolute tolerance used by default in numeric comparisons throughout the
/// library and its property checks.
inline constexpr double kTol = 1e-12;

/// Violated precondition or ill-formed input.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation declined: a size guard tripped or a checked hypothesis failed.
/// Distinct from domain_error so callers (and the CLI exit code) can tell
/// "bad input" from "input fine, computation refused".
class refusal_error : public std::runtime_error {
public:
    explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace modvar
